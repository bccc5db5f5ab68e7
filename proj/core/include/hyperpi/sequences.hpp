// Combinatorial sequences behind the series kernels, each computable by
// several independent routes, and exact verification of their three-term
// recurrences with polynomial coefficients.

#ifndef HYPERPI_SEQUENCES_HPP
#define HYPERPI_SEQUENCES_HPP

#include "hyperpi/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hyperpi {

/// Polynomial in n with integer coefficients, c[j] * n^j.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> coefficients);
    explicit IntPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) {}

    Integer eval(const Integer& n) const;
    bool is_zero() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const Integer& s, const IntPolynomial& a);

  private:
    std::vector<Integer> c_;
};

/// Linear recurrence sum_i coeff[i](n) * s_{n + i - shift} = 0, written in
/// the source convention (terms s_{n+1}, s_n, s_{n-1} for a three-term
/// recurrence have shift 1). The checker evaluates it exactly; nothing is
/// ever derived from it unless a method explicitly says so.
struct RecurrenceSpec {
    std::vector<IntPolynomial> coeffs; // coeffs[i] multiplies s_{n+i-shift}
    long shift = 0;

    void validate() const; // leading polynomial must not vanish identically
};

/// 8(n+1)^3 u_{n+1} - (2n+1)(8n^2+8n+5) u_n + 8n^3 u_{n-1} = 0
RecurrenceSpec u_recurrence();

/// (n+1)^3 U_{n+1} - 8(2n+1)(8n^2+8n+5) U_n + 4096 n^3 U_{n-1} = 0
RecurrenceSpec U_recurrence();

enum class USmallMethod { convolution, quarters, recurrence };
enum class UBigMethod { direct, recurrence, rescale };

/// u_0..u_nmax. The two summation forms are independent; the recurrence
/// method seeds u_0 = 1, u_1 = 5/8.
std::vector<Rational> u_seq(std::size_t nmax, USmallMethod method);

/// U_0..U_nmax, all integers. rescale computes 2^{6n} u_n and asserts
/// integrality; recurrence seeds U_0 = 1, U_1 = 40 and asserts exact
/// divisibility at every step.
std::vector<Integer> U_seq(std::size_t nmax, UBigMethod method);

/// A_n = C(2n,n)^2 * sum_k C(2k,k)^2 C(2n-2k,n-k)^2
std::vector<Integer> A_seq(std::size_t nmax);

/// B_n = sum_k C(n,k)^4
std::vector<Integer> B_seq(std::size_t nmax);

struct RecurrenceReport {
    bool holds = true;
    std::optional<long> first_failure;
};

/// Evaluates the recurrence combination exactly at every n in [n_lo, n_hi].
/// The sequence must cover indices n_lo - shift .. n_hi + order - shift.
RecurrenceReport check_recurrence(std::span<const Rational> seq, const RecurrenceSpec& rec,
                                  long n_lo, long n_hi);
RecurrenceReport check_recurrence(std::span<const Integer> seq, const RecurrenceSpec& rec,
                                  long n_lo, long n_hi);

} // namespace hyperpi

#endif
