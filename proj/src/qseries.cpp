#include "qcalc/qseries.hpp"

#include "qcalc/errors.hpp"
#include "qcalc/qpoly.hpp"

#include <sstream>

namespace qcalc {

QSeries::QSeries(int order) {
    if (order < 0) throw SeriesDomainError("QSeries: negative order");
    coeffs_.assign(static_cast<size_t>(order), BigRat(0));
}

QSeries::QSeries(int order, std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
    if (order < 0) throw SeriesDomainError("QSeries: negative order");
    coeffs_.resize(static_cast<size_t>(order), BigRat(0));
}

QSeries QSeries::from_poly(const QPoly& p, int order) {
    QSeries s(order);
    const int top = std::min(order - 1, p.degree());
    for (int k = 0; k <= top; ++k) s.coeffs_[static_cast<size_t>(k)] = p.coeff(k);
    return s;
}

BigRat QSeries::coeff(int k) const {
    if (k < 0 || k >= order()) return BigRat(0);
    return coeffs_[static_cast<size_t>(k)];
}

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r(std::min(order(), o.order()));
    for (int k = 0; k < r.order(); ++k)
        r.coeffs_[static_cast<size_t>(k)] = coeff(k) + o.coeff(k);
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries r(std::min(order(), o.order()));
    for (int i = 0; i < r.order(); ++i) {
        if (coeffs_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; i + j < r.order(); ++j) {
            r.coeffs_[static_cast<size_t>(i + j)] +=
                coeffs_[static_cast<size_t>(i)] * o.coeff(j);
        }
    }
    return r;
}

QSeries QSeries::operator*(const BigRat& s) const {
    QSeries r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

QSeries QSeries::shift(int k) const {
    QSeries r(order());
    for (int i = 0; i + k < order(); ++i) {
        if (i + k < 0) continue;
        r.coeffs_[static_cast<size_t>(i + k)] = coeff(i);
    }
    return r;
}

QSeries QSeries::reciprocal() const {
    if (order() == 0) return QSeries(0);
    if (coeffs_[0] == 0)
        throw SeriesAtPole("QSeries::reciprocal: zero constant term");
    // If 1/(sum a_n q^n) = sum b_n q^n then b_0 = 1/a_0 and for n >= 1
    // b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}.
    QSeries r(order());
    const BigRat inv0 = BigRat(1) / coeffs_[0];
    r.coeffs_[0] = inv0;
    for (int n = 1; n < order(); ++n) {
        BigRat acc(0);
        for (int k = 1; k <= n; ++k)
            acc += coeff(k) * r.coeffs_[static_cast<size_t>(n - k)];
        r.coeffs_[static_cast<size_t>(n)] = -inv0 * acc;
    }
    return r;
}

std::string QSeries::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int k = 0; k < order(); ++k) {
        if (k) os << ", ";
        os << coeffs_[static_cast<size_t>(k)].get_str();
    }
    os << "] + O(q^" << order() << ")";
    return os.str();
}

} // namespace qcalc
