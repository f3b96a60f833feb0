#pragma once

#include <map>
#include <vector>

namespace vtx {

// Permutation of {0,...,n-1} in one-line notation: p[i] is the image of i.
struct Perm {
    std::vector<int> p;

    static Perm identity(int n);
    int n() const { return static_cast<int>(p.size()); }
    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm& o) const { return p <=> o.p; }
};

Perm compose(const Perm& a, const Perm& b); // (a*b)(i) = a(b(i))
Perm inverse(const Perm& a);
int num_inversions(const Perm& a); // Coxeter length
// Reduced word in adjacent transpositions s_i (0-based, swapping i, i+1):
// w = s_{out[0]} * s_{out[1]} * ... * s_{out.back()}.
std::vector<int> reduced_word(const Perm& a);
Perm transposition(int n, int i); // s_i

/* Catalog of S_n with generator multiplication and coset machinery for Young
   subgroups given by compositions.  Elements are sorted lexicographically by
   one-line notation; index 0 is the identity. */
class SymmetricGroup {
public:
    explicit SymmetricGroup(int n);

    int n() const { return n_; }
    int order() const { return static_cast<int>(elems_.size()); }
    const Perm& elem(int idx) const { return elems_[idx]; }
    int index_of(const Perm& w) const;
    int length(int idx) const { return lengths_[idx]; }
    int inverse_idx(int idx) const { return inv_[idx]; }
    // Index of w * s_i and s_i * w.
    int mult_gen_right(int widx, int i) const { return right_[widx][i]; }
    int mult_gen_left(int widx, int i) const { return left_[widx][i]; }
    const std::vector<int>& word(int idx) const { return words_[idx]; }

    // Young subgroup S_comp (composition of n): membership, elements,
    // internal generators, minimal coset representatives.
    static std::vector<int> internal_generators(const std::vector<int>& comp);
    bool in_young(int widx, const std::vector<int>& comp) const;
    std::vector<int> young_elements(const std::vector<int>& comp) const;
    /* Minimal-length representatives of the left cosets d*S_sub inside S_ambient
       (sub must refine ambient blockwise); sorted by (length, index). */
    std::vector<int> coset_reps(const std::vector<int>& ambient, const std::vector<int>& sub) const;
    // w = d*u with u in S_sub, d minimal; returns (d, u), checks length additivity.
    std::pair<int, int> coset_factorize(int widx, const std::vector<int>& sub) const;

    static const SymmetricGroup& get(int n); // flyweight

private:
    int n_;
    std::vector<Perm> elems_;
    std::map<std::vector<int>, int> index_;
    std::vector<int> lengths_;
    std::vector<int> inv_;
    std::vector<std::vector<int>> right_, left_;
    std::vector<std::vector<int>> words_;
};

// Blocks of a composition as [begin, end) position ranges.
std::vector<std::pair<int, int>> composition_blocks(const std::vector<int>& comp);
// True if fine refines coarse blockwise (consecutive runs summing to coarse parts).
bool refines(const std::vector<int>& fine, const std::vector<int>& coarse);

} // namespace vtx
