#include "vtx/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "vtx/util.hpp"

namespace vtx {

namespace {

using Poly = std::vector<Rat>; // coefficient of x^k at index k

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Euclidean division; requires b monic-ish (nonzero lead).
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    Poly q;
    trim(a);
    VTX_CHECK(!b.empty(), "division by zero polynomial");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    const Rat& lead = b.back();
    while (a.size() >= b.size()) {
        const Rat f = a.back() / lead;
        const std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
        if (a.empty()) break;
        if (a.size() >= b.size() && a.back() == 0) trim(a);
    }
    return {q, a};
}

Poly cyclotomic_poly(int e) {
    // x^e - 1 divided by the cyclotomic polynomials of the proper divisors.
    Poly num(e + 1, Rat(0));
    num[0] = -1;
    num[e] = 1;
    for (int d = 1; d < e; ++d) {
        if (e % d != 0) continue;
        auto [q, r] = divmod(num, cyclotomic_poly(d));
        VTX_CHECK(r.empty(), "cyclotomic division must be exact");
        num = q;
    }
    return num;
}

int euler_phi(int e) {
    int result = e, m = e;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

} // namespace

CycField::CycField(int e) : e_(e) {
    VTX_CHECK(e >= 2, "e must be >= 2");
    phi_ = cyclotomic_poly(e);
    degree_ = static_cast<int>(phi_.size()) - 1;
    VTX_CHECK(degree_ == euler_phi(e), "deg Phi_e == phi(e)");
    VTX_CHECK(phi_.back() == 1, "Phi_e is monic");
    // Reduction table for x^k, k < 2*degree-1 (enough for products of reduced elements).
    powers_.resize(std::max(2 * degree_ - 1, degree_));
    for (int k = 0; k < degree_; ++k) {
        powers_[k].assign(degree_, Rat(0));
        powers_[k][k] = 1;
    }
    for (int k = degree_; k < static_cast<int>(powers_.size()); ++k) {
        // x^k = x * x^{k-1}; shift then reduce the overflow coefficient.
        Poly v(degree_, Rat(0));
        const Poly& prev = powers_[k - 1];
        Rat top = prev[degree_ - 1];
        for (int i = degree_ - 1; i >= 1; --i) v[i] = prev[i - 1];
        v[0] = 0;
        for (int i = 0; i < degree_; ++i) v[i] -= top * phi_[i];
        powers_[k] = std::move(v);
    }
}

const CycField& CycField::get(int e) {
    static std::mutex mu;
    static std::map<int, const CycField*> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, new CycField(e)).first;
    return *it->second;
}

Cyc Cyc::zeta(const CycField& F) {
    std::vector<Rat> c(F.degree(), Rat(0));
    if (F.degree() == 1) {
        // e.g. e = 2: zeta = -Phi_2(0) root = -1; in general the root of a linear modulus.
        c[0] = -F.modulus()[0];
    } else {
        c[1] = 1;
    }
    Cyc z;
    z.F_ = &F;
    z.c_ = std::move(c);
    return z;
}

Cyc Cyc::of(const CycField& F, std::vector<Rat> coeffs) {
    const int d = F.degree();
    std::vector<Rat> out(d, Rat(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        VTX_CHECK(k < F.power_table().size(), "coefficient degree out of reduction table");
        const auto& row = F.power_table()[k];
        for (int i = 0; i < d; ++i) out[i] += coeffs[k] * row[i];
    }
    Cyc z;
    z.F_ = &F;
    z.c_ = std::move(out);
    return z;
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyc::rational_value() const {
    VTX_CHECK(is_rational(), "not a rational value");
    return c_[0];
}

namespace {
const CycField* common_field(const Cyc& a, const Cyc& b) {
    const CycField* F = a.field() ? a.field() : b.field();
    if (a.field() && b.field()) VTX_CHECK(a.field() == b.field(), "mixed cyclotomic fields");
    return F;
}
std::vector<Rat> lift(const Cyc& x, const CycField* F) {
    if (x.field() || !F) return x.coeffs();
    std::vector<Rat> c(F->degree(), Rat(0));
    c[0] = x.coeffs()[0];
    return c;
}
} // namespace

Cyc operator+(const Cyc& a, const Cyc& b) {
    const CycField* F = common_field(a, b);
    std::vector<Rat> x = lift(a, F), y = lift(b, F);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    Cyc z;
    z.F_ = F;
    z.c_ = std::move(x);
    return z;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
    const CycField* F = common_field(a, b);
    std::vector<Rat> x = lift(a, F), y = lift(b, F);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
    Cyc z;
    z.F_ = F;
    z.c_ = std::move(x);
    return z;
}

Cyc operator-(const Cyc& a) {
    Cyc z = a;
    for (auto& x : z.c_) x = -x;
    return z;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    const CycField* F = common_field(a, b);
    if (!F) {
        Cyc z;
        z.c_ = {a.c_[0] * b.c_[0]};
        return z;
    }
    std::vector<Rat> x = lift(a, F), y = lift(b, F);
    std::vector<Rat> prod(x.size() + y.size() - 1, Rat(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            prod[i + j] += x[i] * y[j];
        }
    }
    return Cyc::of(*F, std::move(prod));
}

bool operator==(const Cyc& a, const Cyc& b) { return (a - b).is_zero(); }

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (!F_) {
        Cyc z;
        z.c_ = {1 / c_[0]};
        return z;
    }
    // Extended Euclid for gcd(a, Phi_e) = 1 in Q[x].
    Poly r0 = F_->modulus(), r1 = c_;
    trim(r1);
    Poly s0 = {}, s1 = {Rat(1)}; // coefficients of the element in the Bezout identity
    while (true) {
        auto [q, r] = divmod(r0, r1);
        if (r.empty()) break;
        // s2 = s0 - q*s1
        Poly qs(q.size() + s1.size(), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        trim(qs);
        Poly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    VTX_CHECK(r1.size() == 1, "element and Phi_e must be coprime");
    const Rat scale = 1 / r1[0];
    for (auto& x : s1) x *= scale;
    return Cyc::of(*F_, std::move(s1));
}

Cyc Cyc::pow(long long k) const {
    VTX_CHECK(k >= 0 || !is_zero(), "0^negative");
    Cyc base = k >= 0 ? *this : inverse();
    unsigned long long m = k >= 0 ? k : -k;
    Cyc acc(1);
    while (m) {
        if (m & 1ULL) acc = acc * base;
        base = base * base;
        m >>= 1ULL;
    }
    return acc;
}

std::string Cyc::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i >= 1) os << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<std::string> Cyc::serialize() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.get_str());
    return out;
}

} // namespace vtx
