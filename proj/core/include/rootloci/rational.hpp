#pragma once

#include <gmpxx.h>
#include <string>

namespace rootloci {

// Exact arithmetic backends.  mpq_class keeps every value in lowest terms
// with positive denominator, which is exactly the canonical form we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Size measure used for "simplest pivot" selection in Gaussian elimination.
inline size_t bit_size(const Rational& r) {
    return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

inline Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned n, unsigned k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Integer pow_int(long base, unsigned exp) {
    Integer b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

// "3", "-7", "2/3"
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace rootloci
