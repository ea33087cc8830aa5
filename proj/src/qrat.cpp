#include "qcalc/qrat.hpp"

#include "qcalc/errors.hpp"
#include "qcalc/qseries.hpp"

#include <sstream>

namespace qcalc {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("QRat: zero denominator");
    canonicalize();
}

QRat QRat::q_pow(long e) {
    if (e >= 0) return QRat(QPoly::monomial(static_cast<int>(e)));
    return QRat(QPoly::one(), QPoly::monomial(static_cast<int>(-e)));
}

void QRat::canonicalize() {
    if (num_.is_zero()) {
        den_ = QPoly::one();
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    const BigRat lc = den_.leading();
    if (lc != 1) {
        num_ = num_ * (BigRat(1) / lc);
        den_ = den_ * (BigRat(1) / lc);
    }
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat QRat::operator+(const QRat& o) const {
    return QRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator-(const QRat& o) const {
    return QRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator*(const QRat& o) const {
    if (is_zero() || o.is_zero()) return QRat();
    // Cross-reduce before multiplying to keep the final gcd small.
    QPoly g1 = QPoly::gcd(num_, o.den_);
    QPoly g2 = QPoly::gcd(o.num_, den_);
    QPoly n1 = g1.degree() > 0 ? num_.div_exact(g1) : num_;
    QPoly d2 = g1.degree() > 0 ? o.den_.div_exact(g1) : o.den_;
    QPoly n2 = g2.degree() > 0 ? o.num_.div_exact(g2) : o.num_;
    QPoly d1 = g2.degree() > 0 ? den_.div_exact(g2) : den_;
    return QRat(n1 * n2, d1 * d2);
}

QRat QRat::operator/(const QRat& o) const {
    if (o.is_zero()) throw DivisionByZero("QRat: division by zero rational function");
    return *this * o.inverse();
}

QRat QRat::inverse() const {
    if (is_zero()) throw DivisionByZero("QRat: inverse of zero");
    return QRat(den_, num_);
}

QRat QRat::pow(long e) const {
    if (e == 0) return QRat(BigRat(1));
    QRat base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    QRat acc(BigRat(1));
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

BigRat QRat::eval(const BigRat& q0) const {
    const BigRat d = den_.eval(q0);
    if (d == 0) throw EvalAtPole("QRat::eval: pole at q = " + q0.get_str());
    return num_.eval(q0) / d;
}

BigRat QRat::limit_q1() const {
    if (is_zero()) return BigRat(0);
    QPoly n = num_;
    QPoly d = den_;
    // gcd(n, d) = 1, so (q-1) cannot divide both; still, values built from
    // non-canonical intermediates are handled by peeling factors pairwise.
    while (n.eval(BigRat(1)) == 0 && d.eval(BigRat(1)) == 0) {
        n = n.div_q_minus_one();
        d = d.div_q_minus_one();
    }
    const BigRat dv = d.eval(BigRat(1));
    if (dv == 0) throw PoleAtOne("QRat::limit_q1: pole at q = 1");
    return n.eval(BigRat(1)) / dv;
}

QSeries QRat::to_series(int order) const {
    if (order < 0) throw SeriesDomainError("QRat::to_series: negative order");
    if (den_.coeff(0) == 0)
        throw SeriesAtPole("QRat::to_series: denominator vanishes at q = 0");
    QSeries n = QSeries::from_poly(num_, order);
    QSeries d = QSeries::from_poly(den_, order);
    return n * d.reciprocal();
}

std::pair<QPoly, QPoly> QRat::integer_normalized() const {
    if (is_zero()) return {QPoly::zero(), QPoly::one()};
    // content = gcd of coefficient numerators / lcm of denominators,
    // carrying the sign of the leading coefficient.
    auto content = [](const QPoly& p) {
        Int g(0), l(1);
        for (const auto& c : p.coeffs()) {
            if (c == 0) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        }
        BigRat cont = make_rat(g, l);
        if (p.leading() < 0) cont = -cont;
        return cont;
    };
    const BigRat cn = content(num_);
    const BigRat cd = content(den_);
    QPoly p_num = num_ * (BigRat(1) / cn); // integer, primitive, positive leading
    QPoly p_den = den_ * (BigRat(1) / cd);
    BigRat scale = cn / cd; // value = scale * p_num / p_den
    // Fold the reduced scale u/v into N = u*p_num, D = v*p_den.
    QPoly N = p_num * BigRat(scale.get_num());
    QPoly D = p_den * BigRat(scale.get_den());
    return {N, D};
}

std::string QRat::to_string() const {
    if (is_zero()) return "0";
    auto [N, D] = integer_normalized();
    if (D.is_one()) return N.to_string();
    return "(" + N.to_string() + ")/(" + D.to_string() + ")";
}

std::string QRat::to_latex() const {
    if (is_zero()) return "0";
    auto render = [](const QPoly& p) {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= p.degree(); ++k) {
            const BigRat c = p.coeff(k);
            if (c == 0) continue;
            const bool neg = c < 0;
            BigRat mag = neg ? BigRat(-c) : c;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            if (mag != 1 || k == 0) os << mag.get_str();
            if (k >= 1) {
                os << "q";
                if (k >= 2) os << "^{" << k << "}";
            }
        }
        return os.str();
    };
    auto [N, D] = integer_normalized();
    if (D.is_one()) return render(N);
    return "\\frac{" + render(N) + "}{" + render(D) + "}";
}

QRat operator+(const BigRat& s, const QRat& r) { return QRat(s) + r; }
QRat operator-(const BigRat& s, const QRat& r) { return QRat(s) - r; }
QRat operator*(const BigRat& s, const QRat& r) { return QRat(s) * r; }

} // namespace qcalc
