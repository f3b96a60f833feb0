#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace vtx {

using Rat = mpq_class;

/* The field Q(zeta_e) = Q[x]/Phi_e(x), with zeta = class of x a primitive
   e-th root of unity.  Phi_e is computed by exact division of x^e - 1 by the
   cyclotomic polynomials of the proper divisors of e. */
class CycField {
public:
    explicit CycField(int e);

    int e() const { return e_; }
    int degree() const { return degree_; } // phi(e)
    // Monic modulus, coefficient of x^k at index k, length degree()+1.
    const std::vector<Rat>& modulus() const { return phi_; }
    // x^k mod Phi_e for k in [0, 2*degree-2], as coefficient vectors of length degree().
    const std::vector<std::vector<Rat>>& power_table() const { return powers_; }

    static const CycField& get(int e); // shared flyweight, thread-safe

private:
    int e_;
    int degree_;
    std::vector<Rat> phi_;
    std::vector<std::vector<Rat>> powers_;
};

/* An element of Q(zeta_e).  A null field pointer means a plain rational
   constant; constants promote when combined with proper field elements, so
   Cyc(0) and Cyc(1) work in any field. */
class Cyc {
public:
    Cyc() : c_{Rat(0)} {}
    Cyc(long long v) : c_{Rat(static_cast<long>(v))} {}
    Cyc(int v) : c_{Rat(v)} {}
    explicit Cyc(const Rat& v) : c_{v} {}
    static Cyc zeta(const CycField& F);
    static Cyc of(const CycField& F, std::vector<Rat> coeffs); // reduced mod Phi_e

    const CycField* field() const { return F_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const; // requires is_rational()
    const std::vector<Rat>& coeffs() const { return c_; }

    Cyc inverse() const; // throws std::domain_error on 0
    Cyc pow(long long k) const;

    std::string to_string() const;
    std::vector<std::string> serialize() const; // coefficient array, "p/q" strings

    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a);
    friend bool operator==(const Cyc& a, const Cyc& b);
    Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
    Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
    Cyc& operator*=(const Cyc& b) { return *this = *this * b; }

private:
    const CycField* F_ = nullptr;
    std::vector<Rat> c_; // length 1 (rational) or F_->degree()
};

} // namespace vtx
