#include "qcalc/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qcalc {

QPoly::QPoly(const BigRat& c) {
    if (c != 0) coeffs_.push_back(c);
}

QPoly::QPoly(std::initializer_list<BigRat> ascending) : coeffs_(ascending) {
    trim();
}

QPoly::QPoly(std::vector<BigRat> ascending) : coeffs_(std::move(ascending)) {
    trim();
}

QPoly QPoly::monomial(int k, const BigRat& c) {
    QPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(static_cast<size_t>(k) + 1, BigRat(0));
    p.coeffs_[static_cast<size_t>(k)] = c;
    return p;
}

bool QPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

BigRat QPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigRat(0);
    return coeffs_[static_cast<size_t>(k)];
}

const BigRat& QPoly::leading() const {
    if (is_zero()) throw std::logic_error("QPoly::leading on zero polynomial");
    return coeffs_.back();
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), BigRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    QPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, BigRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

QPoly QPoly::operator*(const BigRat& s) const {
    if (s == 0) return QPoly();
    QPoly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

QPoly operator*(const BigRat& s, const QPoly& p) { return p * s; }

BigRat QPoly::eval(const BigRat& q0) const {
    BigRat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * q0 + coeffs_[i];
    }
    return acc;
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& d) const {
    if (d.is_zero()) throw std::logic_error("QPoly::divrem by zero polynomial");
    QPoly quo;
    QPoly rem = *this;
    const int dd = d.degree();
    if (rem.degree() >= dd) {
        quo.coeffs_.assign(static_cast<size_t>(rem.degree() - dd) + 1, BigRat(0));
    }
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        const BigRat factor = rem.leading() / d.leading();
        quo.coeffs_[static_cast<size_t>(shift)] = factor;
        // rem -= factor * q^shift * d, done in place
        for (int i = 0; i <= dd; ++i) {
            rem.coeffs_[static_cast<size_t>(i + shift)] -= factor * d.coeffs_[static_cast<size_t>(i)];
        }
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

QPoly QPoly::div_exact(const QPoly& d) const {
    auto [quo, rem] = divrem(d);
    if (!rem.is_zero()) throw std::logic_error("QPoly::div_exact: division not exact");
    return quo;
}

QPoly QPoly::pow(unsigned long e) const {
    QPoly acc = QPoly::one();
    QPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    // Monic Euclidean algorithm over Q; coefficients stay manageable at
    // desk-scale degrees.  Normalizing each remainder to monic keeps the
    // intermediate rationals from compounding.
    auto monic = [](QPoly p) {
        if (p.is_zero()) return p;
        const BigRat lc = p.leading();
        for (auto& c : p.coeffs_) c /= lc;
        return p;
    };
    a = monic(std::move(a));
    b = monic(std::move(b));
    while (!b.is_zero()) {
        QPoly r = a.divrem(b).second;
        a = std::move(b);
        b = monic(std::move(r));
    }
    return a;
}

QPoly QPoly::div_q_minus_one() const {
    if (eval(BigRat(1)) != 0)
        throw std::logic_error("QPoly::div_q_minus_one: 1 is not a root");
    if (is_zero()) return QPoly();
    // Synthetic division by (q - 1): descending Horner with root 1.
    std::vector<BigRat> out(coeffs_.size() - 1, BigRat(0));
    BigRat carry(0);
    for (size_t i = coeffs_.size(); i-- > 1;) {
        carry += coeffs_[i];
        out[i - 1] = carry;
    }
    return QPoly(std::move(out));
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const BigRat& c = coeffs_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        BigRat mag = neg ? BigRat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool unit_coeff = (mag == 1 && k > 0);
        if (!unit_coeff) os << mag.get_str();
        if (k >= 1) {
            os << "q";
            if (k >= 2) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace qcalc
