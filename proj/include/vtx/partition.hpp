#pragma once

#include <compare>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vtx {

/* Integer partitions, stored without trailing zeros.  The comparison operator
   is lexicographic on the part vectors; enumerate_partitions() lists the
   partitions of n in decreasing lexicographic order, which refines dominance
   (checked at construction). */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // "4,1" -> (4,1); "" -> empty partition.
    static Partition parse(const std::string& text);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    // 1-based; rows beyond the length read as 0.
    int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Cell of a Young diagram, 1-based (row, column).
struct Cell {
    int row = 1;
    int col = 1;
};

inline int residue(const Cell& c, int e) { return ((c.col - c.row) % e + e) % e; }

// Strictly decreasing bead positions; encodes a partition relative to a bead count.
struct BetaSet {
    std::vector<int> beta; // strictly decreasing, non-negative

    static BetaSet of(const Partition& lambda, int bead_count);
    Partition to_partition() const;
};

struct ECoreData {
    Partition core;
    int weight = 0;
    std::vector<Partition> quotient; // e runner partitions, first-column reading
};

struct WilcoxDecomposition {
    Partition sigma;
    Partition nu;
};

Partition conjugate(const Partition& lambda);

// True iff every difference lambda_i - lambda_{i+1} (including the last part) is < e.
bool is_e_restricted(const Partition& lambda, int e);

ECoreData e_core_quotient(const Partition& lambda, int e);

// The unique lambda = e*sigma + nu with nu e-restricted.
WilcoxDecomposition wilcox_decompose(const Partition& lambda, int e);

// mu dominated by lambda; requires |mu| == |lambda|.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// Number of standard Young tableaux (hook length formula).
mpz_class syt_count(const Partition& lambda);

// All partitions of n in decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

// Componentwise lambda + mu and e*lambda.
Partition add_partitions(const Partition& a, const Partition& b);
Partition scale_partition(int e, const Partition& lambda);

std::vector<int> hook_lengths_row(const Partition& lambda, int row); // hooks of the cells in one row
std::vector<Cell> addable_cells(const Partition& lambda);
std::vector<Cell> removable_cells(const Partition& lambda);
Partition add_cell(const Partition& lambda, const Cell& c);

} // namespace vtx
