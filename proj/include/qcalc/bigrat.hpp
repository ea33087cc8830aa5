#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qcalc {

// Arbitrary-precision integers and reduced rationals.  GMP's canonical
// form matches the invariants we need everywhere: denominator >= 1 and
// gcd(|num|, den) = 1 after canonicalize().
using Int = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(long num, long den = 1) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline BigRat make_rat(const Int& num, const Int& den) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Classical binomial coefficient; zero outside 0 <= k <= n.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// k(k-1)/2, the exponent that pairs with alternating signs throughout
// the q-difference calculus.
inline long choose2(long k) { return k * (k - 1) / 2; }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigRat rat_pow(const BigRat& base, long e) {
    if (e == 0) return BigRat(1);
    BigRat b = base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    BigRat acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (e < 0) return BigRat(1) / acc;
    return acc;
}

// "a/b", or just "a" for integers.
inline std::string rat_to_string(const BigRat& r) {
    return r.get_str();
}

} // namespace qcalc
