// Truncated formal power series over Rational. A Series of order N stores
// the coefficients of z^0 .. z^{N-1}; every binary operation truncates to
// the smaller operand order, so precision never silently inflates.

#ifndef HYPERPI_SERIES_HPP
#define HYPERPI_SERIES_HPP

#include "hyperpi/rational.hpp"

#include <optional>
#include <vector>

namespace hyperpi {

class Series {
  public:
    explicit Series(std::size_t order) : c_(order) {}
    explicit Series(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {}

    static Series constant(const Rational& value, std::size_t order);
    static Series one(std::size_t order) { return constant(Rational(1), order); }
    // 1 - z
    static Series one_minus_z(std::size_t order);

    std::size_t order() const { return c_.size(); }
    const Rational& operator[](std::size_t n) const { return c_[n]; }
    Rational& operator[](std::size_t n) { return c_[n]; }
    const std::vector<Rational>& coefficients() const { return c_; }

    Series truncated(std::size_t order) const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator-(const Series& a);
    friend Series operator*(const Series& a, const Series& b); // Cauchy product
    friend Series operator*(const Rational& s, const Series& a);

  private:
    std::vector<Rational> c_;
};

/// A(W(z)) truncated to the common order. W must have zero constant term.
Series compose(const Series& a, const Series& w);

/// A^alpha for rational alpha; A must have constant term 1. Uses the
/// coefficient recursion obtained from (A^alpha)' * A = alpha * A' * A^alpha.
Series pow_rational(const Series& a, const Rational& alpha);

/// Euler operator z d/dz: multiplies the n-th coefficient by n.
Series theta(const Series& a);

/// Formal derivative; result has order N-1.
Series derivative(const Series& a);

/// The quadratic-transformation argument -4z/(1-z)^2 = -4 * sum n z^n.
Series quad_map(std::size_t order);

struct SeriesCompare {
    bool equal = true;
    std::optional<std::size_t> first_mismatch;
};

/// Coefficientwise comparison up to the common order.
SeriesCompare compare_series(const Series& a, const Series& b);

} // namespace hyperpi

#endif
