// Exact arbitrary-precision integers and rationals, plus the small
// combinatorial building blocks every other module is made of.

#ifndef HYPERPI_RATIONAL_HPP
#define HYPERPI_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace hyperpi {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
/// No operation on this type ever rounds.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}           // NOLINT: implicit by design
    Rational(const Integer& n) : v_(n) {} // NOLINT
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    // Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
    static Rational from_string(const std::string& s);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { Rational r; r.v_ = ::abs(a.v_); return r; }

    // Integer power, e may be negative (then *this must be nonzero).
    Rational pow(long e) const;

    // Decimal approximation for diagnostics only; all verification is exact.
    double to_double() const { return v_.get_d(); }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

  private:
    mpq_class v_; // kept canonical by construction and by GMP arithmetic
};

/// Rising factorial (a)_n = a(a+1)...(a+n-1); empty product for n = 0.
Rational pochhammer(const Rational& a, unsigned long n);

/// n!/(k!(n-k)!) with the convention binomial(n, k) = 0 for k > n.
Integer binomial(unsigned long n, unsigned long k);

/// (4n)!/(n!^2 (2n)!), an integer: equals C(4n,2n) * C(2n,n).
Integer factorial_ratio(unsigned long n);

Integer factorial(unsigned long n);

/// Writes m = s^2 * d with d squarefree; trial division, intended for
/// the moderate radicands produced by the derivation module.
std::pair<Integer, Integer> squarefree_decompose(const Integer& m);

/// Number of the form r * sqrt(d), d a squarefree positive integer.
/// d = 1 encodes a pure rational. Constructors normalize the radicand,
/// so equality is structural: 5*sqrt(1025) compares equal to 25*sqrt(41).
class AlgebraicValue {
  public:
    AlgebraicValue() : r_(0), d_(1) {}
    AlgebraicValue(Rational r, const Integer& radicand);

    const Rational& coefficient() const { return r_; }
    const Integer& radicand() const { return d_; }
    bool is_rational() const { return d_ == 1; }

    friend AlgebraicValue operator*(const Rational& s, const AlgebraicValue& a) {
        AlgebraicValue r = a;
        r.r_ *= s;
        return r;
    }
    friend bool operator==(const AlgebraicValue& a, const AlgebraicValue& b) {
        return a.r_ == b.r_ && a.d_ == b.d_;
    }

    // "10*sqrt(5)", "3/2", "0"
    std::string to_string() const;

  private:
    Rational r_;
    Integer d_;
};

} // namespace hyperpi

#endif
