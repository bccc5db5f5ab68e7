#include "hyperpi/bigfloat.hpp"

#include <stdexcept>

namespace hyperpi {

Integer isqrt(const Integer& m) {
    if (m < 0)
        throw std::invalid_argument("isqrt: negative argument");
    if (m == 0)
        return 0;
    // Newton iteration x -> (x + m/x) / 2 from a power-of-two overestimate.
    const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    Integer x = Integer(1) << ((bits + 2) / 2);
    while (true) {
        Integer next = (x + m / x) >> 1;
        if (next >= x)
            break;
        x = next;
    }
    // x = floor(sqrt(m)) at the first non-decreasing step
    return x;
}

namespace {

Rational pow2(long e) {
    Integer p = Integer(1) << static_cast<unsigned long>(e < 0 ? -e : e);
    return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

// Nearest integer to num/den, ties away from zero.
Integer round_div(const Integer& num, const Integer& den) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * abs(r) >= den)
        q += sgn(num) >= 0 ? 1 : -1;
    return q;
}

} // namespace

BigFloat BigFloat::from_rational(const Rational& q, long prec_bits, const Rational& input_err) {
    if (prec_bits < 4)
        throw std::invalid_argument("BigFloat: precision too small");
    if (q.is_zero())
        return BigFloat(Integer(0), -prec_bits, input_err);
    const long num_bits = static_cast<long>(mpz_sizeinbase(q.num().get_mpz_t(), 2));
    const long den_bits = static_cast<long>(mpz_sizeinbase(q.den().get_mpz_t(), 2));
    // exp chosen so the mantissa carries prec_bits significant bits
    const long exp = (num_bits - den_bits) - prec_bits;
    // mant = round(q * 2^{-exp})
    Integer num = q.num();
    Integer den = q.den();
    if (exp <= 0)
        num <<= static_cast<unsigned long>(-exp);
    else
        den <<= static_cast<unsigned long>(exp);
    const Integer mant = round_div(num, den);
    const Rational rounding = pow2(exp - 1); // |q - mant*2^exp| <= 2^{exp-1}
    return BigFloat(mant, exp, input_err + rounding);
}

Rational BigFloat::value() const {
    return Rational(mant_) * pow2(exp_);
}

BigFloat add(const BigFloat& a, const BigFloat& b, long prec_bits) {
    return BigFloat::from_rational(a.value() + b.value(), prec_bits, a.err_ + b.err_);
}

BigFloat sub(const BigFloat& a, const BigFloat& b, long prec_bits) {
    return BigFloat::from_rational(a.value() - b.value(), prec_bits, a.err_ + b.err_);
}

BigFloat mul(const BigFloat& a, const BigFloat& b, long prec_bits) {
    const Rational va = a.value(), vb = b.value();
    const Rational err = abs(va) * b.err_ + abs(vb) * a.err_ + a.err_ * b.err_;
    return BigFloat::from_rational(va * vb, prec_bits, err);
}

BigFloat div(const BigFloat& a, const BigFloat& b, long prec_bits) {
    const Rational va = a.value(), vb = b.value();
    const Rational denom_low = abs(vb) - b.err_;
    if (denom_low.sign() <= 0)
        throw std::domain_error("BigFloat div: divisor not provably nonzero");
    const Rational v = va / vb;
    const Rational err = (a.err_ + abs(v) * b.err_) / denom_low;
    return BigFloat::from_rational(v, prec_bits, err);
}

namespace {

// Rational r with r <= sqrt(x) < r + 1/(x.den * 2^k), for x >= 0.
Rational floor_sqrt_scaled(const Rational& x, long k) {
    Integer scaled = x.num() * x.den();
    scaled <<= static_cast<unsigned long>(2 * k);
    return Rational(isqrt(scaled)) / (Rational(x.den()) * pow2(k));
}

} // namespace

BigFloat sqrt(const BigFloat& a, long prec_bits) {
    const Rational va = a.value();
    const Rational low = va - a.err_;
    if (low.sign() <= 0)
        throw std::domain_error("BigFloat sqrt: argument not provably positive");
    const long k = prec_bits + 8;
    const Rational approx = floor_sqrt_scaled(va, k);
    const Rational scale_err = Rational(1) / (Rational(va.den()) * pow2(k));
    // |sqrt(x) - sqrt(y)| = |x - y| / (sqrt(x) + sqrt(y)) <= |x - y| / (2 sqrt(low))
    // for x, y >= low; the exact rational root_low certifies sqrt(low) > 0.
    Rational input_term(0);
    if (!a.err_.is_zero()) {
        const Rational root_low = floor_sqrt_scaled(low, k);
        if (root_low.sign() <= 0)
            throw std::domain_error("BigFloat sqrt: argument too small to certify");
        input_term = a.err_ / (Rational(2) * root_low);
    }
    return BigFloat::from_rational(approx, prec_bits, scale_err + input_term);
}

Rational residual_bound(const BigFloat& a, const BigFloat& b) {
    return abs(a.value() - b.value()) + a.err_ + b.err_;
}

std::string BigFloat::to_decimal(std::size_t digits) const {
    if (digits == 0)
        throw std::invalid_argument("to_decimal: need at least one digit");
    const Rational v = value();
    if (v.is_zero())
        return "0";
    const bool negative = v.sign() < 0;
    const Rational av = abs(v);
    // Find e with 10^e <= av < 10^{e+1}.
    long e = 0;
    {
        Rational p(1);
        if (av >= Rational(1)) {
            while (p * Rational(10) <= av) {
                p *= Rational(10);
                ++e;
            }
        } else {
            while (p > av) {
                p /= Rational(10);
                --e;
            }
        }
    }
    // Round av / 10^{e - digits + 1} to nearest.
    const long shift = e - static_cast<long>(digits) + 1;
    const Rational scaled = av / pow10(shift);
    Integer rounded = round_div(scaled.num(), scaled.den());
    std::string s = rounded.get_str();
    if (s.size() > digits) { // rounding carried into a new leading digit
        ++e;
        s.pop_back();
    }
    std::string out;
    if (negative)
        out += "-";
    if (e >= 0 && static_cast<std::size_t>(e) < digits) {
        out += s.substr(0, static_cast<std::size_t>(e) + 1);
        const std::string frac = s.substr(static_cast<std::size_t>(e) + 1);
        if (!frac.empty())
            out += "." + frac;
    } else if (e < 0 && e >= -6) {
        out += "0.";
        out.append(static_cast<std::size_t>(-e - 1), '0');
        out += s;
    } else {
        // Scientific form for magnitudes outside the plain range.
        out += s.substr(0, 1);
        if (s.size() > 1)
            out += "." + s.substr(1);
        out += "e" + std::to_string(e);
    }
    return out;
}

long decimal_exponent_bound(const Rational& bound) {
    if (bound.sign() < 0)
        throw std::invalid_argument("decimal_exponent_bound: negative bound");
    if (bound.is_zero())
        return -9999; // sentinel: exact value, no residual
    long e = 0;
    Rational p(1);
    while (p < bound) {
        p *= Rational(10);
        ++e;
    }
    while (e > -9999) {
        const Rational next = p / Rational(10);
        if (next < bound)
            break;
        p = next;
        --e;
    }
    return e;
}

Rational pow10(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

} // namespace hyperpi
