// Arbitrary-precision binary floating point with an explicit rigorous
// error bound carried alongside every value. The represented value
// mant * 2^exp is itself an exact rational, so arithmetic is performed
// exactly and rounded once, and bound propagation stays in Rational.

#ifndef HYPERPI_BIGFLOAT_HPP
#define HYPERPI_BIGFLOAT_HPP

#include "hyperpi/rational.hpp"

#include <string>

namespace hyperpi {

/// floor(sqrt(m)) by Newton iteration; m must be nonnegative.
Integer isqrt(const Integer& m);

class BigFloat {
  public:
    BigFloat() : mant_(0), exp_(0), err_(0) {}

    /// Nearest representable value with about prec_bits mantissa bits.
    /// input_err is an absolute bound already attached to q (truncation
    /// tails and the like); the rounding error is added to it.
    static BigFloat from_rational(const Rational& q, long prec_bits,
                                  const Rational& input_err = Rational(0));

    Rational value() const; // exact: mant * 2^exp
    const Rational& error_bound() const { return err_; }
    const Integer& mantissa() const { return mant_; }
    long exponent() const { return exp_; }

    bool same_representation(const BigFloat& o) const {
        return mant_ == o.mant_ && exp_ == o.exp_;
    }

    friend BigFloat add(const BigFloat& a, const BigFloat& b, long prec_bits);
    friend BigFloat sub(const BigFloat& a, const BigFloat& b, long prec_bits);
    friend BigFloat mul(const BigFloat& a, const BigFloat& b, long prec_bits);
    friend BigFloat div(const BigFloat& a, const BigFloat& b, long prec_bits);
    /// Square root; the argument must be provably positive (value > error).
    friend BigFloat sqrt(const BigFloat& a, long prec_bits);

    /// |a - b| plus both error bounds: a rigorous bound on the distance
    /// between the two represented true values.
    friend Rational residual_bound(const BigFloat& a, const BigFloat& b);

    /// Decimal expansion with the given number of significant digits,
    /// rounded to nearest. "3.141592654" for 10 digits of pi; "3" for one.
    std::string to_decimal(std::size_t digits) const;

  private:
    BigFloat(Integer mant, long exp, Rational err)
        : mant_(std::move(mant)), exp_(exp), err_(std::move(err)) {}

    Integer mant_;
    long exp_;
    Rational err_;
};

/// Smallest integer k with bound <= 10^k, for reporting residual
/// magnitudes; bound must be positive (zero reports a floor value).
long decimal_exponent_bound(const Rational& bound);

/// Exact power of ten as a rational (e may be negative).
Rational pow10(long e);

} // namespace hyperpi

#endif
