#include "vtx/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vtx/util.hpp"

namespace vtx {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        VTX_CHECK(parts_[i] > 0, "parts must be positive");
        if (i + 1 < parts_.size()) VTX_CHECK(parts_[i] >= parts_[i + 1], "parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        if (token.empty()) continue;
        parts.push_back(std::stoi(token));
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

BetaSet BetaSet::of(const Partition& lambda, int bead_count) {
    VTX_CHECK(bead_count >= lambda.length(), "bead count too small");
    BetaSet b;
    b.beta.resize(bead_count);
    for (int i = 1; i <= bead_count; ++i) b.beta[i - 1] = lambda.part(i) + (bead_count - i);
    return b;
}

Partition BetaSet::to_partition() const {
    const int k = static_cast<int>(beta.size());
    std::vector<int> sorted = beta;
    std::sort(sorted.rbegin(), sorted.rend());
    std::vector<int> parts(k);
    for (int i = 1; i <= k; ++i) parts[i - 1] = sorted[i - 1] - (k - i);
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(lambda.part(1), 0);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) cols[j]++;
    return Partition(std::move(cols));
}

bool is_e_restricted(const Partition& lambda, int e) {
    VTX_CHECK(e >= 2, "e must be >= 2");
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.part(i) - lambda.part(i + 1) >= e) return false;
    return true;
}

ECoreData e_core_quotient(const Partition& lambda, int e) {
    VTX_CHECK(e >= 2, "e must be >= 2");
    int k = std::max(lambda.length(), e);
    if (k % e != 0) k += e - (k % e);
    const BetaSet b = BetaSet::of(lambda, k);

    // Sort the beads onto runners (position mod e) and slide each runner down.
    std::vector<std::vector<int>> levels(e); // descending per runner
    for (int p : b.beta) levels[p % e].push_back(p / e);
    ECoreData out;
    out.weight = 0;
    std::vector<int> core_positions;
    for (int r = 0; r < e; ++r) {
        auto& lv = levels[r];
        std::sort(lv.rbegin(), lv.rend());
        const int c = static_cast<int>(lv.size());
        for (int j = 0; j < c; ++j) {
            const int slot = c - 1 - j; // beads slide to levels c-1, ..., 0
            out.weight += lv[j] - slot;
            core_positions.push_back(r + e * slot);
        }
        // quotient partition on runner r from its bead levels
        std::vector<int> qp(c);
        for (int j = 1; j <= c; ++j) qp[j - 1] = lv[j - 1] - (c - j);
        out.quotient.push_back(Partition(std::move(qp)));
    }
    BetaSet cb;
    cb.beta = std::move(core_positions);
    out.core = cb.to_partition();
    VTX_CHECK(out.core.size() + e * out.weight == lambda.size(), "core/weight size identity");
    int qsum = 0;
    for (const auto& q : out.quotient) qsum += q.size();
    VTX_CHECK(qsum == out.weight, "quotient sizes must sum to the weight");
    return out;
}

WilcoxDecomposition wilcox_decompose(const Partition& lambda, int e) {
    VTX_CHECK(e >= 2, "e must be >= 2");
    const int len = lambda.length();
    std::vector<int> nu(len, 0), sigma(len, 0);
    int nu_suffix = 0, sigma_suffix = 0;
    for (int i = len; i >= 1; --i) {
        const int d = lambda.part(i) - lambda.part(i + 1);
        nu_suffix += d % e;
        sigma_suffix += d / e;
        nu[i - 1] = nu_suffix;
        sigma[i - 1] = sigma_suffix;
    }
    WilcoxDecomposition out{Partition(std::move(sigma)), Partition(std::move(nu))};
    VTX_CHECK(add_partitions(scale_partition(e, out.sigma), out.nu) == lambda, "recomposition identity");
    VTX_CHECK(is_e_restricted(out.nu, e), "nu must be e-restricted");
    return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    VTX_CHECK(mu.size() == lambda.size(), "dominance compares partitions of equal size");
    int pm = 0, pl = 0;
    const int len = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= len; ++i) {
        pm += mu.part(i);
        pl += lambda.part(i);
        if (pm > pl) return false;
    }
    return true;
}

mpz_class syt_count(const Partition& lambda) {
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
    const Partition conj = conjugate(lambda);
    mpz_class den = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            const int hook = (lambda.part(i) - j) + (conj.part(j) - i) + 1;
            den *= hook;
        }
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    VTX_CHECK(r == 0, "hook length formula divides exactly");
    return q;
}

namespace {
void enumerate_rec(int n, int maxpart, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}
} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    VTX_CHECK(n >= 0, "n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(n, n == 0 ? 1 : n, acc, out);
    if (out.empty()) out.push_back(Partition{});
    // The listing order must refine dominance: mu trianglelefteq lambda implies
    // lambda listed no later than mu.
    if (n <= 14) {
        for (std::size_t a = 0; a < out.size(); ++a)
            for (std::size_t b = a + 1; b < out.size(); ++b)
                VTX_CHECK(!dominance_leq(out[a], out[b]) || out[a] == out[b],
                          "enumeration order must refine dominance");
    }
    return out;
}

Partition add_partitions(const Partition& a, const Partition& b) {
    const int len = std::max(a.length(), b.length());
    std::vector<int> parts(len);
    for (int i = 1; i <= len; ++i) parts[i - 1] = a.part(i) + b.part(i);
    return Partition(std::move(parts));
}

Partition scale_partition(int e, const Partition& lambda) {
    std::vector<int> parts(lambda.parts());
    for (int& p : parts) p *= e;
    return Partition(std::move(parts));
}

std::vector<int> hook_lengths_row(const Partition& lambda, int row) {
    const Partition conj = conjugate(lambda);
    std::vector<int> out;
    for (int j = 1; j <= lambda.part(row); ++j)
        out.push_back((lambda.part(row) - j) + (conj.part(j) - row) + 1);
    return out;
}

std::vector<Cell> addable_cells(const Partition& lambda) {
    std::vector<Cell> out;
    for (int r = 1; r <= lambda.length() + 1; ++r)
        if (r == 1 || lambda.part(r - 1) > lambda.part(r)) out.push_back(Cell{r, lambda.part(r) + 1});
    return out;
}

std::vector<Cell> removable_cells(const Partition& lambda) {
    std::vector<Cell> out;
    for (int r = 1; r <= lambda.length(); ++r)
        if (lambda.part(r) > lambda.part(r + 1)) out.push_back(Cell{r, lambda.part(r)});
    return out;
}

Partition add_cell(const Partition& lambda, const Cell& c) {
    std::vector<int> parts(lambda.parts());
    if (c.row == lambda.length() + 1) {
        VTX_CHECK(c.col == 1, "new row must start at column 1");
        parts.push_back(1);
    } else {
        VTX_CHECK(c.col == lambda.part(c.row) + 1, "cell must extend its row by one");
        parts[c.row - 1]++;
    }
    return Partition(std::move(parts));
}

} // namespace vtx
