#pragma once

#include "qcalc/qpoly.hpp"

#include <string>

namespace qcalc {

class QSeries;

/**
 * Rational function of q over Q, kept in canonical reduced form:
 * gcd(num, den) = 1 and den monic.  Zero is num = 0, den = 1.
 *
 * Canonical form makes identity checking a pure equality test, which is
 * what the whole audit engine leans on.
 */
class QRat {
public:
    QRat() : num_(), den_(QPoly::one()) {}
    QRat(const BigRat& c) : num_(QPoly(c)), den_(QPoly::one()) {}
    QRat(long c) : QRat(BigRat(c)) {}
    explicit QRat(const QPoly& p) : num_(p), den_(QPoly::one()) {}
    QRat(QPoly num, QPoly den);

    // The indeterminate q itself.
    static QRat q() { return QRat(QPoly::monomial(1)); }
    // q^e for any integer e, negative exponents included.
    static QRat q_pow(long e);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    QRat operator-() const;
    QRat operator+(const QRat& o) const;
    QRat operator-(const QRat& o) const;
    QRat operator*(const QRat& o) const;
    QRat operator/(const QRat& o) const;
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }

    // Canonical form is a normal form, so field equality is memberwise.
    bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRat& o) const { return !(*this == o); }

    QRat inverse() const;
    QRat pow(long e) const;

    // Exact value at q = q0; throws EvalAtPole if the denominator vanishes.
    BigRat eval(const BigRat& q0) const;

    // Limit as q -> 1 by cancelling (q-1) factors from both sides, never
    // numerically; throws PoleAtOne on a genuine pole.
    BigRat limit_q1() const;

    // Maclaurin expansion through q^{order-1}; requires den(0) != 0.
    QSeries to_series(int order) const;

    /**
     * Canonical textual form: the unique N(q)/D(q) with integer
     * coefficients, coprime contents, positive leading denominator
     * coefficient and gcd(N, D) = 1, rendered as "(N)/(D)" in ascending
     * powers, or just "N" when D = 1.
     */
    std::string to_string() const;

    // Same value as a LaTeX fragment (\frac{N}{D} with braced exponents).
    std::string to_latex() const;

private:
    void canonicalize();
    // Integer-normalized pair (N, D) described at to_string().
    std::pair<QPoly, QPoly> integer_normalized() const;

    QPoly num_;
    QPoly den_;
};

QRat operator+(const BigRat& s, const QRat& r);
QRat operator-(const BigRat& s, const QRat& r);
QRat operator*(const BigRat& s, const QRat& r);

} // namespace qcalc
