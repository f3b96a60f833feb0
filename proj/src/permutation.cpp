#include "vtx/permutation.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "vtx/util.hpp"

namespace vtx {

Perm Perm::identity(int n) {
    Perm w;
    w.p.resize(n);
    std::iota(w.p.begin(), w.p.end(), 0);
    return w;
}

Perm compose(const Perm& a, const Perm& b) {
    VTX_CHECK(a.n() == b.n(), "composing permutations of different degree");
    Perm c;
    c.p.resize(a.n());
    for (int i = 0; i < a.n(); ++i) c.p[i] = a.p[b.p[i]];
    return c;
}

Perm inverse(const Perm& a) {
    Perm c;
    c.p.resize(a.n());
    for (int i = 0; i < a.n(); ++i) c.p[a.p[i]] = i;
    return c;
}

int num_inversions(const Perm& a) {
    int count = 0;
    for (int i = 0; i < a.n(); ++i)
        for (int j = i + 1; j < a.n(); ++j)
            if (a.p[i] > a.p[j]) ++count;
    return count;
}

std::vector<int> reduced_word(const Perm& a) {
    // Bubble-sort the one-line notation to the identity; the swaps, read in
    // reverse, give a reduced word of length = #inversions.
    std::vector<int> word;
    std::vector<int> v = a.p;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < static_cast<int>(v.size()); ++i) {
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                word.push_back(i);
                moved = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

Perm transposition(int n, int i) {
    Perm w = Perm::identity(n);
    std::swap(w.p[i], w.p[i + 1]);
    return w;
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
    VTX_CHECK(n >= 1, "n >= 1");
    Perm w = Perm::identity(n);
    do {
        index_[w.p] = static_cast<int>(elems_.size());
        elems_.push_back(w);
    } while (std::next_permutation(w.p.begin(), w.p.end()));
    const int N = order();
    lengths_.resize(N);
    inv_.resize(N);
    words_.resize(N);
    right_.assign(N, std::vector<int>(std::max(n - 1, 0)));
    left_.assign(N, std::vector<int>(std::max(n - 1, 0)));
    for (int idx = 0; idx < N; ++idx) {
        lengths_[idx] = num_inversions(elems_[idx]);
        inv_[idx] = index_.at(inverse(elems_[idx]).p);
        words_[idx] = reduced_word(elems_[idx]);
        for (int i = 0; i + 1 < n; ++i) {
            right_[idx][i] = index_.at(compose(elems_[idx], transposition(n, i)).p);
            left_[idx][i] = index_.at(compose(transposition(n, i), elems_[idx]).p);
        }
    }
}

int SymmetricGroup::index_of(const Perm& w) const {
    auto it = index_.find(w.p);
    VTX_CHECK(it != index_.end(), "permutation not of this degree");
    return it->second;
}

const SymmetricGroup& SymmetricGroup::get(int n) {
    static std::mutex mu;
    static std::map<int, const SymmetricGroup*> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, new SymmetricGroup(n)).first;
    return *it->second;
}

std::vector<std::pair<int, int>> composition_blocks(const std::vector<int>& comp) {
    std::vector<std::pair<int, int>> blocks;
    int pos = 0;
    for (int part : comp) {
        VTX_CHECK(part >= 1, "composition parts positive");
        blocks.emplace_back(pos, pos + part);
        pos += part;
    }
    return blocks;
}

bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
    std::size_t i = 0;
    for (int part : coarse) {
        int acc = 0;
        while (acc < part) {
            if (i >= fine.size()) return false;
            acc += fine[i++];
        }
        if (acc != part) return false;
    }
    return i == fine.size();
}

std::vector<int> SymmetricGroup::internal_generators(const std::vector<int>& comp) {
    std::vector<int> gens;
    int pos = 0;
    for (int part : comp) {
        for (int i = pos; i + 1 < pos + part; ++i) gens.push_back(i);
        pos += part;
    }
    return gens;
}

bool SymmetricGroup::in_young(int widx, const std::vector<int>& comp) const {
    const Perm& w = elems_[widx];
    for (const auto& [lo, hi] : composition_blocks(comp))
        for (int i = lo; i < hi; ++i)
            if (w.p[i] < lo || w.p[i] >= hi) return false;
    return true;
}

std::vector<int> SymmetricGroup::young_elements(const std::vector<int>& comp) const {
    std::vector<int> out;
    for (int idx = 0; idx < order(); ++idx)
        if (in_young(idx, comp)) out.push_back(idx);
    return out;
}

std::vector<int> SymmetricGroup::coset_reps(const std::vector<int>& ambient,
                                            const std::vector<int>& sub) const {
    VTX_CHECK(std::accumulate(ambient.begin(), ambient.end(), 0) == n_, "ambient composition of n");
    VTX_CHECK(refines(sub, ambient), "sub must refine ambient");
    const auto blocks = composition_blocks(sub);
    std::vector<int> out;
    for (int idx = 0; idx < order(); ++idx) {
        if (!in_young(idx, ambient)) continue;
        const Perm& w = elems_[idx];
        bool minimal = true;
        for (const auto& [lo, hi] : blocks)
            for (int i = lo; i + 1 < hi && minimal; ++i)
                if (w.p[i] > w.p[i + 1]) minimal = false;
        if (minimal) out.push_back(idx);
    }
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        if (lengths_[a] != lengths_[b]) return lengths_[a] < lengths_[b];
        return a < b;
    });
    return out;
}

std::pair<int, int> SymmetricGroup::coset_factorize(int widx, const std::vector<int>& sub) const {
    const Perm& w = elems_[widx];
    Perm uinv = Perm::identity(n_);
    for (const auto& [lo, hi] : composition_blocks(sub)) {
        std::vector<std::pair<int, int>> vals; // (w-value, position)
        for (int i = lo; i < hi; ++i) vals.emplace_back(w.p[i], i);
        std::sort(vals.begin(), vals.end());
        for (int t = 0; t < hi - lo; ++t) uinv.p[lo + t] = vals[t].second;
    }
    const Perm d = compose(w, uinv);
    const Perm u = inverse(uinv);
    const int didx = index_.at(d.p);
    const int uidx = index_.at(u.p);
    VTX_CHECK(lengths_[widx] == lengths_[didx] + lengths_[uidx], "length-additive factorization");
    return {didx, uidx};
}

} // namespace vtx
