#pragma once

#include "qcalc/bigrat.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qcalc {

/**
 * Dense univariate polynomial in q over the rationals.
 *
 * Coefficients are stored in ascending powers; the highest-index
 * coefficient is nonzero unless the polynomial is zero (empty vector).
 * Degrees stay small at desk scale, so dense storage with exact
 * rational coefficients is the right trade.
 */
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const BigRat& c);
    QPoly(std::initializer_list<BigRat> ascending);
    explicit QPoly(std::vector<BigRat> ascending);

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly(BigRat(1)); }
    // c * q^k
    static QPoly monomial(int k, const BigRat& c = BigRat(1));

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<BigRat>& coeffs() const { return coeffs_; }
    // Coefficient of q^k, zero outside the stored range.
    BigRat coeff(int k) const;
    const BigRat& leading() const;

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const BigRat& s) const;

    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    BigRat eval(const BigRat& q0) const;

    // Long division; divisor must be nonzero.
    std::pair<QPoly, QPoly> divrem(const QPoly& d) const;
    // Division known to be exact; throws std::logic_error on a nonzero
    // remainder since that always means a broken caller invariant.
    QPoly div_exact(const QPoly& d) const;

    QPoly pow(unsigned long e) const;

    // Monic gcd over Q; gcd(0, 0) = 0.
    static QPoly gcd(QPoly a, QPoly b);

    // Divide by (q - 1); only valid when eval(1) == 0.
    QPoly div_q_minus_one() const;

    std::string to_string() const;

private:
    void trim();
    std::vector<BigRat> coeffs_;
};

QPoly operator*(const BigRat& s, const QPoly& p);

} // namespace qcalc
