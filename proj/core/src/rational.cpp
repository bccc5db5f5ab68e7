#include "hyperpi/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hyperpi {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s), Integer(1));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0)
        return Rational(1);
    if (is_zero() && e < 0)
        throw std::invalid_argument("Rational: negative power of zero");
    Rational base = e > 0 ? *this : Rational(1) / *this;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (k) {
        if (k & 1)
            acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string Rational::to_string() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.v_;
}

Rational pochhammer(const Rational& a, unsigned long n) {
    Rational acc(1);
    Rational term = a;
    for (unsigned long k = 0; k < n; ++k) {
        acc *= term;
        term += Rational(1);
    }
    return acc;
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer factorial_ratio(unsigned long n) {
    return binomial(4 * n, 2 * n) * binomial(2 * n, n);
}

std::pair<Integer, Integer> squarefree_decompose(const Integer& m) {
    if (m <= 0)
        throw std::invalid_argument("squarefree_decompose: argument must be positive");
    Integer rest = m;
    Integer s = 1, d = 1;
    auto strip = [&](const Integer& p) {
        unsigned exponent = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++exponent;
        }
        if (exponent == 0)
            return;
        Integer half;
        mpz_pow_ui(half.get_mpz_t(), p.get_mpz_t(), exponent / 2);
        s *= half;
        if (exponent % 2)
            d *= p;
    };
    strip(Integer(2));
    for (Integer p = 3; p * p <= rest; p += 2)
        strip(p);
    d *= rest; // leftover is prime (or 1), exponent 1
    return {s, d};
}

AlgebraicValue::AlgebraicValue(Rational r, const Integer& radicand) : r_(std::move(r)) {
    auto [s, d] = squarefree_decompose(radicand);
    r_ *= Rational(s);
    d_ = d;
    if (r_.is_zero())
        d_ = 1;
}

std::string AlgebraicValue::to_string() const {
    if (d_ == 1 || r_.is_zero())
        return r_.to_string();
    return r_.to_string() + "*sqrt(" + d_.get_str() + ")";
}

} // namespace hyperpi
