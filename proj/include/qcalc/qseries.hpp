#pragma once

#include "qcalc/bigrat.hpp"

#include <string>
#include <vector>

namespace qcalc {

class QPoly;

/**
 * Power series in q truncated at a fixed order D: exactly D coefficients
 * for q^0 .. q^{D-1}.  Truncation is the only notion of convergence used
 * anywhere; all coefficient arithmetic is exact.
 */
class QSeries {
public:
    explicit QSeries(int order);
    QSeries(int order, std::vector<BigRat> coeffs);

    static QSeries from_poly(const QPoly& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<BigRat>& coeffs() const { return coeffs_; }
    BigRat coeff(int k) const;

    QSeries operator-() const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const BigRat& s) const;
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }

    bool operator==(const QSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    // Multiply by q^k, shifting coefficients and truncating at the order.
    QSeries shift(int k) const;

    // 1 / series; requires a nonzero constant term.
    QSeries reciprocal() const;

    std::string to_string() const;

private:
    std::vector<BigRat> coeffs_;
};

} // namespace qcalc
