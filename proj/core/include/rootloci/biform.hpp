#pragma once

#include <string>
#include <vector>

#include "rootloci/rational.hpp"

namespace rootloci {

class SymForm;

// Homogeneous form in the Chern roots u, v with exact rational coefficients.
// coeff(k) is the coefficient of u^k v^{degree-k}.  All-zero forms normalize
// to the canonical zero of degree 0.
class BiForm {
public:
    BiForm() : deg_(0), c_(1) {}
    BiForm(int degree, std::vector<Rational> coeffs);

    static BiForm zero() { return BiForm(); }
    static BiForm constant(const Rational& a);
    // cu*u + cv*v
    static BiForm linear(const Rational& cu, const Rational& cv);
    static BiForm monomial(const Rational& a, int upow, int vpow);

    int degree() const { return deg_; }
    bool is_zero() const;
    const Rational& coeff(int upow) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    BiForm operator-() const;
    BiForm operator+(const BiForm& o) const;
    BiForm operator-(const BiForm& o) const;
    BiForm operator*(const BiForm& o) const;
    BiForm operator*(const Rational& a) const;
    BiForm& operator+=(const BiForm& o) { return *this = *this + o; }
    BiForm& operator-=(const BiForm& o) { return *this = *this - o; }
    BiForm& operator*=(const BiForm& o) { return *this = *this * o; }
    bool operator==(const BiForm& o) const;
    bool operator!=(const BiForm& o) const { return !(*this == o); }

    BiForm pow(int n) const;
    // u <-> v
    BiForm swapped() const;
    bool is_symmetric() const { return *this == swapped(); }
    Rational evaluate(const Rational& u0, const Rational& v0) const;

private:
    int deg_;
    std::vector<Rational> c_;  // size deg_ + 1, index = u-power
};

inline BiForm operator*(const Rational& a, const BiForm& f) { return f * a; }

// (P(u,v) - P(v,u)) / (u - v); exact by antisymmetry of the numerator.
BiForm divided_difference(const BiForm& p);

// Exact quotient a/b; throws "inexact division" if b does not divide a.
BiForm exact_div(const BiForm& a, const BiForm& b);

// Gcd of homogeneous forms, normalized so the highest nonzero u-power
// coefficient is 1.  gcd(a, 0) = normalize(a).
BiForm gcd_homogeneous(const BiForm& a, const BiForm& b);

// Polynomial in c1 = u+v, c2 = uv; coeff(k) multiplies c1^(degree-2k) c2^k.
class SymForm {
public:
    SymForm() : deg_(0), c_(1) {}
    SymForm(int degree, std::vector<Rational> coeffs);

    static SymForm zero() { return SymForm(); }
    static SymForm constant(const Rational& a);

    int degree() const { return deg_; }
    bool is_zero() const;
    const Rational& coeff(int c2pow) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const SymForm& o) const;
    bool operator!=(const SymForm& o) const { return !(*this == o); }
    SymForm operator*(const Rational& a) const;

    bool all_integer() const;

private:
    int deg_;
    std::vector<Rational> c_;  // size deg_/2 + 1, index = c2-power
};

// Symmetric-basis conversion; to_sym throws "not symmetric" when the input
// is not swap-invariant.
SymForm to_sym(const BiForm& a);
BiForm from_sym(const SymForm& s);

// "120*u^2 + 192*u*v + 120*v^2", terms by decreasing u-power.
std::string to_string(const BiForm& a);
// "120*c1^2 - 48*c2", terms by decreasing c1-power.
std::string to_string(const SymForm& s);

}  // namespace rootloci
