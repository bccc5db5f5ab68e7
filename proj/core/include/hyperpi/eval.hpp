// High-precision evaluation of the Ramanujan-type series catalog with
// binary splitting over exact integers, provable truncation-tail bounds,
// and residual checks against claimed closed forms assembled from an
// independent Machin-type pi oracle and an integer-Newton square root.

#ifndef HYPERPI_EVAL_HPP
#define HYPERPI_EVAL_HPP

#include "hyperpi/bigfloat.hpp"
#include "hyperpi/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyperpi {

enum class Kernel {
    pochhammer_half_5, // ((1/2)_n / n!)^5
    fr_times_U,        // U_n * (4n)!/(n!^2 (2n)!)
    apery_like_A,      // A_n
    yang_B,            // B_n
};

/// Claimed value S * sqrt(d) / (pi^pi_power * sqrt(extra_sqrt_denom)).
struct ClaimedValue {
    Rational s;
    Integer d = 1;
    int pi_power = 2;
    std::optional<Integer> extra_sqrt_denom;
};

/// The series sum_n kernel(n) * (A n^2 + B n + C) * x^n.
struct RamanujanFormula {
    Kernel kernel;
    Integer quad_a, quad_b, quad_c;
    Rational x;
    ClaimedValue claimed;

    void validate() const; // convergence: kernel growth ratio times |x| < 1
};

struct CatalogEntry {
    std::string id; // eq1, eq2, eq3, yang, thm3-1, thm3-2
    std::string description;
    bool conjectural = false;
    RamanujanFormula formula;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& id);

/// Exact partial sum over [n0, n1) as a rational, by recursive midpoint
/// splitting with integer product trees. threads > 1 parallelizes the top
/// of the tree; results are bit-identical to the sequential evaluation.
Rational binary_split(const RamanujanFormula& formula, std::size_t n0, std::size_t n1,
                      unsigned threads = 1);

/// Same exact partial sum, term by term. Oracle for the splitter.
Rational naive_sum(const RamanujanFormula& formula, std::size_t n);

/// Provable bound on |sum_{n >= N} term(n)|, from the kernel majorants
///   |(1/2)_n/n!|^5 <= 1, U_n <= (n+1) 64^n, fr(n) <= 64^n,
///   A_n <= (n+1) 256^n, B_n <= (n+1) 16^n,
/// folded into max(|A|,|B|,|C|) (N+1)^3 rho^N / (1 - r) with
/// r = rho ((N+2)/(N+1))^3. Requires r < 1.
Rational tail_bound(const RamanujanFormula& formula, std::size_t n_from);

/// Least truncation index whose tail bound is at most `target`.
std::size_t choose_truncation(const RamanujanFormula& formula, const Rational& target);

enum class SumStrategy { binary_split, naive };

struct EvalResult {
    BigFloat value;
    std::size_t terms = 0;
};

/// Sums enough terms for `digits` correct significant digits (tail bound
/// below 10^{-(digits+8)}), then rounds once.
EvalResult eval_formula(const RamanujanFormula& formula, std::size_t digits,
                        SumStrategy strategy = SumStrategy::binary_split, unsigned threads = 1);

enum class PiFormula {
    machin, // pi/4 = 4 arctan(1/5) - arctan(1/239)
    hutton, // pi/4 = 2 arctan(1/3) + arctan(1/7)
};

/// Independent pi oracle: Machin-type arctangent sums over exact rationals
/// with alternating-series tail control. Shares nothing with the series
/// catalog above.
BigFloat pi_reference(std::size_t digits, PiFormula which = PiFormula::machin);

/// sqrt(d) to `digits` significant digits by integer Newton iteration.
BigFloat sqrt_int(const Integer& d, std::size_t digits);

/// The claimed constant of a formula, assembled from pi_reference and
/// sqrt_int with full error accounting.
BigFloat claimed_value(const RamanujanFormula& formula, std::size_t digits);

struct NumericCheck {
    long residual_bound_exponent = 0;
    bool pass = false;
};

/// Compares eval_formula against the assembled claimed value; pass iff the
/// rigorous residual bound is below 10^{5 - digits}.
NumericCheck check_identity_numeric(const RamanujanFormula& formula, std::size_t digits,
                                    unsigned threads = 1);

/// pi recovered from the series and its claimed constant alone.
BigFloat extract_pi(const RamanujanFormula& formula, std::size_t digits, unsigned threads = 1);

} // namespace hyperpi

#endif
