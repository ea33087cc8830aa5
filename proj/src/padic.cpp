#include "qcalc/padic.hpp"

#include "qcalc/errors.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace qcalc {

namespace {

constexpr long long kExactZeroBound = std::numeric_limits<long long>::max() / 4;

void check_prime(long p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("PadicNum: p must be an odd prime >= 3");
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) throw std::invalid_argument("PadicNum: p is not prime");
}

Int p_power(long p, long long e) {
    if (e < 0) throw std::logic_error("p_power: negative exponent");
    return int_pow(Int(p), static_cast<unsigned long>(e));
}

} // namespace

long long int_valuation(const Int& n, long p, Int& cofactor_out) {
    if (n == 0) throw std::logic_error("int_valuation of zero");
    Int pz(p);
    return static_cast<long long>(
        mpz_remove(cofactor_out.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

PadicNum PadicNum::zero(long p) {
    check_prime(p);
    return PadicNum(p, kExactZeroBound, Int(0), 0, true);
}

PadicNum PadicNum::zero_ball(long p, long long bound) {
    check_prime(p);
    return PadicNum(p, std::min(bound, kExactZeroBound), Int(0), 0, true);
}

PadicNum PadicNum::one(long p, int prec) {
    return from_parts(p, 0, Int(1), prec);
}

PadicNum PadicNum::from_parts(long p, long long val, Int unit, int prec) {
    check_prime(p);
    if (prec <= 0) throw PrecisionExhausted("PadicNum: no reliable digits remain");
    const Int mod = p_power(p, prec);
    Int u = unit % mod;
    if (u < 0) u += mod;
    if (u == 0) return zero_ball(p, val + prec);
    if (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(p))) {
        // Not a unit: renormalize by pulling the p-power into the valuation.
        Int cof;
        const long long s = int_valuation(u, p, cof);
        if (s >= prec) return zero_ball(p, val + prec);
        return PadicNum(p, val + s, cof % p_power(p, prec - s),
                        static_cast<int>(prec - s), false);
    }
    return PadicNum(p, val, std::move(u), prec, false);
}

bool PadicNum::is_exact_zero() const { return zero_ && val_ >= kExactZeroBound; }

long long PadicNum::valuation() const {
    if (zero_) throw std::logic_error("PadicNum::valuation of a zero ball");
    return val_;
}

long long PadicNum::valuation_lower_bound() const { return val_; }

long long PadicNum::abs_precision() const { return zero_ ? val_ : val_ + prec_; }

void PadicNum::check_same_prime(const PadicNum& o) const {
    if (p_ != o.p_)
        throw std::invalid_argument("PadicNum: mixed primes in arithmetic");
}

PadicNum PadicNum::operator-() const {
    if (zero_) return *this;
    return PadicNum(p_, val_, p_power(p_, prec_) - unit_, prec_, false);
}

PadicNum PadicNum::operator+(const PadicNum& o) const {
    check_same_prime(o);
    if (is_exact_zero()) return o;
    if (o.is_exact_zero()) return *this;
    if (zero_ && o.zero_) return zero_ball(p_, std::min(val_, o.val_));
    if (zero_ || o.zero_) {
        const PadicNum& ball = zero_ ? *this : o;
        const PadicNum& x = zero_ ? o : *this;
        const long long bound = std::min(ball.val_, x.abs_precision());
        if (x.val_ >= bound) return zero_ball(p_, bound);
        // Truncate x to the joint absolute precision.
        return from_parts(p_, x.val_, x.unit_, static_cast<int>(bound - x.val_));
    }
    const long long abs = std::min(abs_precision(), o.abs_precision());
    const long long m = std::min(val_, o.val_);
    // abs >= m + 1 always holds, so the residue window is nonempty.
    const Int mod = p_power(p_, abs - m);
    Int r = (unit_ * p_power(p_, val_ - m) + o.unit_ * p_power(p_, o.val_ - m)) % mod;
    if (r == 0) return zero_ball(p_, abs);
    return from_parts(p_, m, std::move(r), static_cast<int>(abs - m));
}

PadicNum PadicNum::operator-(const PadicNum& o) const { return *this + (-o); }

PadicNum PadicNum::operator*(const PadicNum& o) const {
    check_same_prime(o);
    if (is_exact_zero() || o.is_exact_zero()) return zero(p_);
    if (zero_ && o.zero_) {
        return zero_ball(p_, std::min(val_ + o.val_, kExactZeroBound));
    }
    if (zero_ || o.zero_) {
        const PadicNum& ball = zero_ ? *this : o;
        const PadicNum& x = zero_ ? o : *this;
        return zero_ball(p_, ball.val_ + x.val_);
    }
    const int prec = std::min(prec_, o.prec_);
    Int u = (unit_ * o.unit_) % p_power(p_, prec);
    return PadicNum(p_, val_ + o.val_, std::move(u), prec, false);
}

PadicNum PadicNum::operator/(const PadicNum& o) const {
    check_same_prime(o);
    if (o.zero_)
        throw DivisionByZero("PadicNum: divisor is zero at its precision");
    if (is_exact_zero()) return zero(p_);
    if (zero_) return zero_ball(p_, val_ - o.val_);
    const int prec = std::min(prec_, o.prec_);
    const Int mod = p_power(p_, prec);
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), o.unit_.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::logic_error("PadicNum: unit not invertible (broken invariant)");
    Int u = (unit_ * inv) % mod;
    return PadicNum(p_, val_ - o.val_, std::move(u), prec, false);
}

PadicNum PadicNum::pow(unsigned long e) const {
    if (e == 0) return one(p_, zero_ ? 1 : prec_);
    if (zero_) {
        if (is_exact_zero()) return *this;
        if (val_ > kExactZeroBound / static_cast<long long>(e)) return zero(p_);
        return zero_ball(p_, val_ * static_cast<long long>(e));
    }
    PadicNum acc = one(p_, prec_);
    PadicNum base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool PadicNum::same_value(const PadicNum& o) const {
    return (*this - o).is_zero_ball();
}

PadicNum PadicNum::from_rational(const BigRat& r, long p, int prec) {
    check_prime(p);
    if (prec <= 0) throw PrecisionExhausted("PadicNum: nonpositive precision");
    if (r == 0) return zero(p);
    Int num = r.get_num();
    Int den = r.get_den();
    Int nu, du;
    const long long a = int_valuation(num, p, nu);
    const long long b = int_valuation(den, p, du);
    const Int mod = p_power(p, prec);
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), du.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::logic_error("PadicNum::from_rational: denominator unit not invertible");
    Int u = (nu * inv) % mod;
    if (u < 0) u += mod;
    return PadicNum(p, a - b, std::move(u), prec, false);
}

std::string PadicNum::to_string() const {
    std::ostringstream os;
    if (zero_) {
        if (is_exact_zero()) return "0";
        os << "O(" << p_ << "^" << val_ << ")";
        return os.str();
    }
    Int rest = unit_;
    bool first = true;
    for (int i = 0; i < prec_ && rest != 0; ++i) {
        const Int digit = rest % p_;
        rest /= p_;
        if (digit == 0) continue;
        if (!first) os << " + ";
        first = false;
        const long long e = val_ + i;
        os << digit.get_str();
        if (e != 0) {
            os << "*" << p_;
            if (e != 1) os << "^" << e;
        }
    }
    if (!first) os << " + ";
    os << "O(" << p_ << "^" << (val_ + prec_) << ")";
    return os.str();
}

PadicQ::PadicQ(long p, const BigRat& q) : p_(p), q_(q) {
    check_prime(p);
    const BigRat d = q - 1;
    if (d == 0)
        throw std::invalid_argument("PadicQ: q = 1 is excluded; use an offset t >= 1");
    Int cof;
    if (mpz_divisible_ui_p(d.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::invalid_argument("PadicQ: q - 1 must be a p-adic integer");
    tval_ = int_valuation(d.get_num(), p, cof);
    if (tval_ < 1)
        throw std::invalid_argument("PadicQ: need q = 1 (mod p)");
}

PadicQ PadicQ::from_offset(long p, long t) {
    if (t < 1) throw std::invalid_argument("PadicQ: offset t must be >= 1");
    return PadicQ(p, BigRat(1 + t * p));
}

PadicNum PadicQ::q_padic(int prec) const {
    return PadicNum::from_rational(q_, p_, prec);
}

} // namespace qcalc
