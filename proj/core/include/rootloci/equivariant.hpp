#pragma once

#include <map>
#include <vector>

#include "rootloci/biform.hpp"

namespace rootloci {

// Polynomial in one formal variable y with BiForm coefficients.
class FormPoly {
public:
    FormPoly() = default;
    static FormPoly variable();                     // y
    static FormPoly constant(const BiForm& c);

    void set_coeff(int exp, const BiForm& c);
    const BiForm& coeff(int exp) const;             // zero if absent
    int degree() const;                             // -1 for the zero poly
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BiForm>& terms() const { return terms_; }

    FormPoly operator+(const FormPoly& o) const;
    FormPoly operator*(const FormPoly& o) const;
    FormPoly operator*(const BiForm& c) const;
    bool operator==(const FormPoly& o) const { return terms_ == o.terms_; }

    // substitute y <- arg (a linear form), multiplying everything out
    BiForm evaluate(const BiForm& arg) const;

private:
    std::map<int, BiForm> terms_;  // exponent -> nonzero coefficient
};

// The torus weights of the space of degree-d binary forms: j*u + (d-j)*v.
std::vector<BiForm> weights(int d);

// Q_k(y) = prod_{j=0}^{k} (y + j*u + (k-j)*v)
FormPoly build_Q(int k);

// C_j with Q_d(x) = sum_j C_{d+1-j} x^j, C_0 = 1; 0 <= j <= d+1.
BiForm chern(int d, int j);

// q(x) = (Q_d(x) - C_{d+1})/x, monic of degree d.
FormPoly build_q(int d);

// Polynomial in x_1..x_r with BiForm coefficients.
struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<int>, BiForm> terms;

    void add_term(const std::vector<int>& key, const BiForm& c);
};

// Substitute x <- sum_i i*x_i into build_q(d); unreduced.
// evec[i-1] is the multiplicity of part i; variables with multiplicity 0 do
// not occur (their projective factor is a point).
MultiPoly pullback_q(int d, const std::vector<int>& evec);

// Element of R[x_1..x_r]/(Q_{e_1}(x_1),..,Q_{e_r}(x_r)) in reduced form:
// every exponent of x_i is at most e_i.
struct ReducedElement {
    std::vector<int> evec;
    std::map<std::vector<int>, BiForm> terms;
};

// Divide out each relation Q_{e_i}(x_i), highest variable first; the result
// is independent of the order.
ReducedElement reduce(const MultiPoly& p, const std::vector<int>& evec);

// Coefficient of the top monomial prod x_i^{e_i}: the pushforward to a class
// on the base.
BiForm integrate(const ReducedElement& re);

// Closed-form integration over the projectivized space of degree-e forms:
//   (1/(v-u)^e) sum_{s=0}^{e} (-1)^s f(-(e-s)u - s v) / (s! (e-s)!)
BiForm integrate_closed(const FormPoly& f, int e);

// Same integral for a class C/g with g linear in y; works over a common
// denominator and exact-divides.  Throws "nonexistent class" when some
// evaluation of g vanishes or fails to divide the accumulated numerator.
BiForm integrate_rational(const BiForm& C, const FormPoly& g, int e);

}  // namespace rootloci
