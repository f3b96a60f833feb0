#pragma once

#include <optional>
#include <vector>

#include "vtx/cyclotomic.hpp"

namespace vtx {

// Dense matrix over Q(zeta_e), row-major.
struct Mat {
    int r = 0, c = 0;
    std::vector<Cyc> a;

    Mat() = default;
    Mat(int rows, int cols) : r(rows), c(cols), a(static_cast<std::size_t>(rows) * cols) {}

    Cyc& at(int i, int j) { return a[static_cast<std::size_t>(i) * c + j]; }
    const Cyc& at(int i, int j) const { return a[static_cast<std::size_t>(i) * c + j]; }

    static Mat identity(int n);
    bool is_zero() const;
    bool is_identity() const;
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat scale(const Cyc& s, const Mat& x);
bool operator==(const Mat& x, const Mat& y);
Cyc trace(const Mat& x);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> row_echelon(std::vector<std::vector<Cyc>>& rows);

int rank(const Mat& m);

// Basis of the right kernel {v : m v = 0}.
std::vector<std::vector<Cyc>> nullspace(const Mat& m);

/* Incremental row-space container: add vectors, query membership and
   coordinates.  Vectors are reduced against the stored echelon basis. */
class RowSpan {
public:
    explicit RowSpan(int width) : width_(width) {}
    // Returns true if the vector enlarged the span.
    bool add(std::vector<Cyc> v);
    bool contains(std::vector<Cyc> v) const;
    // Coordinates of v in terms of the vectors passed to add() (in order),
    // if v lies in the span.
    std::optional<std::vector<Cyc>> coordinates(std::vector<Cyc> v) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }
    const std::vector<std::vector<Cyc>>& echelon_rows() const { return rows_; }

private:
    int width_;
    std::vector<std::vector<Cyc>> rows_;   // echelonized
    std::vector<int> pivots_;              // pivot column per row
    std::vector<std::vector<Cyc>> coords_; // expression of each echelon row in the added vectors
    int added_ = 0;
};

} // namespace vtx
