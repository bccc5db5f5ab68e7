// Generalized hypergeometric series as truncated power series, and exact
// coefficientwise verification of the quadratic-transformation identities:
// the classical 2F1 and 3F2 transforms in the argument -4z/(1-z)^2, the
// 5F4 double-sum transform with its Orr-style restatement, the u_n form
// of the all-halves 5F4, and the squared/fourth-power identity they imply.

#ifndef HYPERPI_HYPERGEOMETRIC_HPP
#define HYPERPI_HYPERGEOMETRIC_HPP

#include "hyperpi/series.hpp"

#include <string>
#include <vector>

namespace hyperpi {

/// Parameter lists of a (q+1)Fq series. Lower parameters are rejected
/// eagerly at construction if zero or a negative integer.
class HypergeometricSpec {
  public:
    HypergeometricSpec(std::vector<Rational> upper, std::vector<Rational> lower);

    const std::vector<Rational>& upper() const { return upper_; }
    const std::vector<Rational>& lower() const { return lower_; }

  private:
    std::vector<Rational> upper_;
    std::vector<Rational> lower_;
};

/// Coefficient of z^n is prod (a_i)_n / (n! prod (b_j)_n), generated by the
/// term-ratio recurrence.
Series hypergeometric_series(const HypergeometricSpec& spec, std::size_t order);

enum class TransformId { gauss, whipple, theorem1, theorem2, eq10, orr };

TransformId transform_from_string(const std::string& name);
std::string to_string(TransformId id);

/// Both sides of a transformation identity, built independently of each
/// other. eq10 carries a third expression; the others leave it empty.
struct TransformSides {
    Series lhs;
    Series rhs;
    std::vector<Series> extra;
};

/// params carries (a,b) for gauss, (a,b,c) for whipple, (a,b,c,d,e) for
/// theorem1/orr, and nothing for theorem2/eq10. Throws std::invalid_argument
/// when an induced lower parameter is zero or a negative integer.
TransformSides transform_sides(TransformId id, const std::vector<Rational>& params,
                               std::size_t order);

struct TransformReport {
    bool equal = true;
    std::optional<std::size_t> first_mismatch;
};

TransformReport verify_transform(TransformId id, const std::vector<Rational>& params,
                                 std::size_t order);

/// Terminating balanced 3F2 at unit argument versus its closed form:
/// sum_{v=0}^{n} (-n)_v (a+n)_v (1+a-d-e)_v / (v! (1+a-d)_v (1+a-e)_v)
/// against (d)_n (e)_n / ((1+a-d)_n (1+a-e)_n), both evaluated exactly.
bool pfaff_saalschutz_check(const Rational& a, const Rational& d, const Rational& e,
                            unsigned long n);

} // namespace hyperpi

#endif
