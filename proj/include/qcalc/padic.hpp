#pragma once

#include "qcalc/bigrat.hpp"

#include <string>

namespace qcalc {

/**
 * p-adic number with explicit precision, p an odd prime.
 *
 * A nonzero value is p^val * (unit + O(p^prec)) with p not dividing unit
 * and unit in [1, p^prec).  A value that is indistinguishable from zero is
 * a "zero ball" O(p^bound); exact zero is the special case bound = +inf.
 * All arithmetic follows the usual interval rules, so cancellation in
 * sums and division by high-valuation quantities lose digits visibly
 * instead of silently.
 */
class PadicNum {
public:
    static PadicNum zero(long p);                            // exact zero
    static PadicNum zero_ball(long p, long long bound);      // O(p^bound)
    static PadicNum one(long p, int prec);
    static PadicNum from_rational(const BigRat& r, long p, int prec);
    static PadicNum from_parts(long p, long long val, Int unit, int prec);

    long prime() const { return p_; }
    bool is_zero_ball() const { return zero_; } // zero as far as known
    bool is_exact_zero() const;

    // Valuation of a certified-nonzero value; throws on a zero ball.
    long long valuation() const;
    // For zero balls this is the bound; otherwise the exact valuation.
    long long valuation_lower_bound() const;
    int unit_precision() const { return zero_ ? 0 : prec_; }
    // Exponent through which the value is known: val + prec, or the bound.
    long long abs_precision() const;
    const Int& unit() const { return unit_; }

    PadicNum operator-() const;
    PadicNum operator+(const PadicNum& o) const;
    PadicNum operator-(const PadicNum& o) const;
    PadicNum operator*(const PadicNum& o) const;
    PadicNum operator/(const PadicNum& o) const;
    PadicNum& operator+=(const PadicNum& o) { return *this = *this + o; }
    PadicNum& operator*=(const PadicNum& o) { return *this = *this * o; }

    PadicNum pow(unsigned long e) const;

    // True when this and o cannot be told apart at the shared precision.
    bool same_value(const PadicNum& o) const;

    // Digit expansion, e.g. "2*5 + 3*5^2 + O(5^6)".
    std::string to_string() const;

private:
    PadicNum(long p, long long val, Int unit, int prec, bool zero)
        : p_(p), val_(val), prec_(prec), unit_(std::move(unit)), zero_(zero) {}

    void check_same_prime(const PadicNum& o) const;

    long p_ = 0;
    long long val_ = 0; // valuation, or the zero-ball bound
    int prec_ = 0;
    Int unit_;
    bool zero_ = true;
};

// Valuation of a nonzero integer; returns the reduced cofactor too.
long long int_valuation(const Int& n, long p, Int& cofactor_out);

/**
 * The deformation parameter for the p-adic integrals: an exact rational q
 * with q = 1 (mod p), which is the p-odd form of |1-q|_p < p^{-1/(p-1)}.
 */
class PadicQ {
public:
    PadicQ(long p, const BigRat& q);
    // q = 1 + t*p, the form the CLI exposes.
    static PadicQ from_offset(long p, long t);

    long prime() const { return p_; }
    const BigRat& q() const { return q_; }
    // v_p(q - 1), always >= 1.
    long long one_minus_q_valuation() const { return tval_; }

    PadicNum q_padic(int prec) const;

private:
    long p_;
    BigRat q_;
    long long tval_;
};

} // namespace qcalc
