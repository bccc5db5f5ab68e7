#include "hyperpi/eval.hpp"

#include "hyperpi/sequences.hpp"

#include <functional>
#include <future>
#include <stdexcept>

namespace hyperpi {

namespace {

long kernel_growth(Kernel k) {
    switch (k) {
    case Kernel::pochhammer_half_5: return 1;
    case Kernel::fr_times_U: return 4096; // 64^n from U_n, 64^n from fr(n)
    case Kernel::apery_like_A: return 256;
    case Kernel::yang_B: return 16;
    }
    throw std::logic_error("bad Kernel");
}

// term(n) = coeff[n] * prod_{k<n} p(k)/q(k), with integer coeff, p, q.
struct TermModel {
    std::vector<Integer> coeff;
    std::function<Integer(std::size_t)> p;
    std::function<Integer(std::size_t)> q;
};

Integer quad_eval(const RamanujanFormula& f, std::size_t n) {
    const Integer nn(static_cast<unsigned long>(n));
    return f.quad_a * nn * nn + f.quad_b * nn + f.quad_c;
}

TermModel make_terms(const RamanujanFormula& f, std::size_t n1) {
    TermModel m;
    const Integer xnum = f.x.num();
    const Integer xden = f.x.den();
    const std::size_t nmax = n1 == 0 ? 0 : n1 - 1;
    switch (f.kernel) {
    case Kernel::pochhammer_half_5:
        m.coeff.resize(n1);
        for (std::size_t n = 0; n < n1; ++n)
            m.coeff[n] = quad_eval(f, n);
        m.p = [xnum](std::size_t k) {
            Integer b(2 * static_cast<unsigned long>(k) + 1);
            return b * b * b * b * b * xnum;
        };
        m.q = [xden](std::size_t k) {
            Integer b(2 * static_cast<unsigned long>(k) + 2);
            return b * b * b * b * b * xden;
        };
        break;
    case Kernel::fr_times_U: {
        const auto U = U_seq(nmax, UBigMethod::recurrence);
        m.coeff.resize(n1);
        for (std::size_t n = 0; n < n1; ++n)
            m.coeff[n] = U[n] * quad_eval(f, n);
        // fr(n+1)/fr(n) = 4 (4n+1)(4n+3) / (n+1)^2
        m.p = [xnum](std::size_t k) {
            const Integer kk(static_cast<unsigned long>(k));
            return 4 * (4 * kk + 1) * (4 * kk + 3) * xnum;
        };
        m.q = [xden](std::size_t k) {
            const Integer kk(static_cast<unsigned long>(k));
            return (kk + 1) * (kk + 1) * xden;
        };
        break;
    }
    case Kernel::apery_like_A: {
        const auto A = A_seq(nmax);
        m.coeff.resize(n1);
        for (std::size_t n = 0; n < n1; ++n)
            m.coeff[n] = A[n] * quad_eval(f, n);
        m.p = [xnum](std::size_t) { return xnum; };
        m.q = [xden](std::size_t) { return xden; };
        break;
    }
    case Kernel::yang_B: {
        const auto B = B_seq(nmax);
        m.coeff.resize(n1);
        for (std::size_t n = 0; n < n1; ++n)
            m.coeff[n] = B[n] * quad_eval(f, n);
        m.p = [xnum](std::size_t) { return xnum; };
        m.q = [xden](std::size_t) { return xden; };
        break;
    }
    }
    return m;
}

struct PQT {
    Integer prod_p, prod_q, total;
};

// Relative sum over [lo, hi): sum_{n=lo}^{hi-1} coeff[n] prod_{k=lo}^{n-1} p/q
// is total / prod_q; prod_p carries the full ratio product for merging.
PQT split_range(const TermModel& m, std::size_t lo, std::size_t hi, unsigned threads) {
    if (hi - lo == 1) {
        Integer q = m.q(lo);
        return {m.p(lo), q, m.coeff[lo] * q};
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    PQT left, right;
    if (threads > 1 && hi - lo >= 32) {
        auto fut = std::async(std::launch::async, [&] { return split_range(m, lo, mid, threads / 2); });
        right = split_range(m, mid, hi, threads - threads / 2);
        left = fut.get();
    } else {
        left = split_range(m, lo, mid, 1);
        right = split_range(m, mid, hi, 1);
    }
    return {left.prod_p * right.prod_p, left.prod_q * right.prod_q,
            left.total * right.prod_q + left.prod_p * right.total};
}

long bits_for_digits(std::size_t digits) {
    return static_cast<long>(digits) * 10 / 3 + 32; // 10/3 over-approximates log2(10)
}

} // namespace

void RamanujanFormula::validate() const {
    const Rational rho = Rational(kernel_growth(kernel)) * abs(x);
    if (rho >= Rational(1))
        throw std::invalid_argument("RamanujanFormula: kernel growth times |x| must be below 1");
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        v.push_back({"eq1", "(1/2)_n^5/n!^5 (20n^2+8n+1) (-1/4)^n = 8/pi^2", false,
                     {Kernel::pochhammer_half_5, 20, 8, 1, Rational(-1, 4),
                      {Rational(8), 1, 2, std::nullopt}}});
        v.push_back({"eq2", "(1/2)_n^5/n!^5 (820n^2+180n+13) (-1/1024)^n = 128/pi^2", false,
                     {Kernel::pochhammer_half_5, 820, 180, 13, Rational(-1, 1024),
                      {Rational(128), 1, 2, std::nullopt}}});
        v.push_back({"eq3", "A_n (36n^2+12n+1) / 1024^n = 32/pi^2", true,
                     {Kernel::apery_like_A, 36, 12, 1, Rational(1, 1024),
                      {Rational(32), 1, 2, std::nullopt}}});
        v.push_back({"yang", "B_n (4n+1) / 36^n = 18/(pi sqrt(15))", false,
                     {Kernel::yang_B, 0, 4, 1, Rational(1, 36),
                      {Rational(18), 1, 1, Integer(15)}}});
        v.push_back({"thm3-1", "U_n (4n)!/(n!^2(2n)!) (18n^2-10n-3) / 6400^n = 10 sqrt(5)/pi^2",
                     false,
                     {Kernel::fr_times_U, 18, -10, -3, Rational(1, 6400),
                      {Rational(10), 5, 2, std::nullopt}}});
        v.push_back({"thm3-2",
                     "U_n (4n)!/(n!^2(2n)!) (1046529n^2+227104n+16032) / 1050625^n = "
                     "25625 sqrt(41)/pi^2",
                     false,
                     {Kernel::fr_times_U, 1046529, 227104, 16032, Rational(1, 1050625),
                      {Rational(25625), 41, 2, std::nullopt}}});
        for (const auto& e : v)
            e.formula.validate();
        return v;
    }();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id)
            return e;
    throw std::invalid_argument("unknown formula id: " + id);
}

Rational binary_split(const RamanujanFormula& formula, std::size_t n0, std::size_t n1,
                      unsigned threads) {
    if (n0 > n1)
        throw std::invalid_argument("binary_split: empty-crossing range");
    if (n0 == n1)
        return Rational(0);
    const TermModel m = make_terms(formula, n1);
    const PQT rel = split_range(m, n0, n1, threads);
    // Restore the absolute base prod_{k<n0} p/q.
    Integer base_p = 1, base_q = 1;
    for (std::size_t k = 0; k < n0; ++k) {
        base_p *= m.p(k);
        base_q *= m.q(k);
    }
    return Rational(base_p * rel.total, base_q * rel.prod_q);
}

Rational naive_sum(const RamanujanFormula& formula, std::size_t n) {
    const TermModel m = make_terms(formula, n);
    Rational acc(0);
    Integer base_p = 1, base_q = 1;
    for (std::size_t k = 0; k < n; ++k) {
        acc += Rational(m.coeff[k] * base_p, base_q);
        base_p *= m.p(k);
        base_q *= m.q(k);
    }
    return acc;
}

Rational tail_bound(const RamanujanFormula& formula, std::size_t n_from) {
    const Rational rho = Rational(kernel_growth(formula.kernel)) * abs(formula.x);
    const long n = static_cast<long>(n_from);
    const Rational step(n + 2, n + 1);
    const Rational r = rho * step * step * step;
    if (r >= Rational(1))
        throw std::domain_error("tail_bound: ratio bound not yet below 1 at this index");
    Integer dmax = abs(formula.quad_a);
    if (abs(formula.quad_b) > dmax)
        dmax = abs(formula.quad_b);
    if (abs(formula.quad_c) > dmax)
        dmax = abs(formula.quad_c);
    const Rational np1(n + 1);
    return Rational(dmax) * np1 * np1 * np1 * rho.pow(n) / (Rational(1) - r);
}

std::size_t choose_truncation(const RamanujanFormula& formula, const Rational& target) {
    if (target.sign() <= 0)
        throw std::invalid_argument("choose_truncation: target must be positive");
    auto bound_ok = [&](std::size_t n) {
        try {
            return tail_bound(formula, n) <= target;
        } catch (const std::domain_error&) {
            return false;
        }
    };
    std::size_t lo = 0, hi = 8;
    while (!bound_ok(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > (std::size_t{1} << 26))
            throw std::runtime_error("choose_truncation: bound does not converge");
    }
    while (lo + 1 < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (bound_ok(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

EvalResult eval_formula(const RamanujanFormula& formula, std::size_t digits,
                        SumStrategy strategy, unsigned threads) {
    if (digits == 0)
        throw std::invalid_argument("eval_formula: digits must be positive");
    formula.validate();
    const Rational target = pow10(-static_cast<long>(digits) - 8);
    const std::size_t n = choose_truncation(formula, target);
    const Rational sum = strategy == SumStrategy::binary_split
                             ? binary_split(formula, 0, n, threads)
                             : naive_sum(formula, n);
    const BigFloat value =
        BigFloat::from_rational(sum, bits_for_digits(digits + 8), tail_bound(formula, n));
    return {value, n};
}

namespace {

struct ArctanPart {
    Rational value;
    Rational err;
};

// arctan(1/k) as an exact rational partial sum plus an alternating-series
// tail bound (first omitted term).
ArctanPart arctan_inverse(unsigned long k, std::size_t digits) {
    const double log10_k2 = 2.0 * std::log10(static_cast<double>(k));
    const std::size_t terms =
        static_cast<std::size_t>(static_cast<double>(digits) / log10_k2) + 2;
    const Integer k2 = Integer(k) * Integer(k);
    TermModel m;
    m.coeff.assign(terms, Integer(1));
    m.p = [](std::size_t j) { return Integer(-(2 * static_cast<long>(j) + 1)); };
    m.q = [k2](std::size_t j) { return (2 * Integer(static_cast<long>(j)) + 3) * k2; };
    const PQT pqt = split_range(m, 0, terms, 1);
    const Rational inner(pqt.total, pqt.prod_q);
    const Rational value = inner / Rational(static_cast<long>(k));
    // first omitted term: 1 / ((2J+1) k^{2J+1})
    Integer omit_den = 2 * Integer(static_cast<unsigned long>(terms)) + 1;
    Integer kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), k, 2 * static_cast<unsigned long>(terms) + 1);
    return {value, Rational(Integer(1), omit_den * kp)};
}

} // namespace

BigFloat pi_reference(std::size_t digits, PiFormula which) {
    if (digits == 0)
        throw std::invalid_argument("pi_reference: digits must be positive");
    const std::size_t work = digits + 12;
    Rational value, err;
    switch (which) {
    case PiFormula::machin: {
        const ArctanPart a5 = arctan_inverse(5, work);
        const ArctanPart a239 = arctan_inverse(239, work);
        value = Rational(16) * a5.value - Rational(4) * a239.value;
        err = Rational(16) * a5.err + Rational(4) * a239.err;
        break;
    }
    case PiFormula::hutton: {
        const ArctanPart a3 = arctan_inverse(3, work);
        const ArctanPart a7 = arctan_inverse(7, work);
        value = Rational(8) * a3.value + Rational(4) * a7.value;
        err = Rational(8) * a3.err + Rational(4) * a7.err;
        break;
    }
    }
    return BigFloat::from_rational(value, bits_for_digits(digits + 6), err);
}

BigFloat sqrt_int(const Integer& d, std::size_t digits) {
    if (d < 1)
        throw std::invalid_argument("sqrt_int: d must be positive");
    if (digits == 0)
        throw std::invalid_argument("sqrt_int: digits must be positive");
    const long k = bits_for_digits(digits) + 16;
    Integer scaled = d;
    scaled <<= static_cast<unsigned long>(2 * k);
    const Integer root = isqrt(scaled);
    const Rational approx = Rational(root, Integer(1) << static_cast<unsigned long>(k));
    const Rational err = Rational(Integer(1), Integer(1) << static_cast<unsigned long>(k));
    return BigFloat::from_rational(approx, bits_for_digits(digits + 2), err);
}

BigFloat claimed_value(const RamanujanFormula& formula, std::size_t digits) {
    const long prec = bits_for_digits(digits + 6);
    const ClaimedValue& c = formula.claimed;
    BigFloat numerator = BigFloat::from_rational(c.s, prec);
    if (c.d != 1)
        numerator = mul(numerator, sqrt_int(c.d, digits + 6), prec);
    const BigFloat pi = pi_reference(digits + 6);
    BigFloat denom = c.pi_power == 2 ? mul(pi, pi, prec) : pi;
    if (c.extra_sqrt_denom)
        denom = mul(denom, sqrt_int(*c.extra_sqrt_denom, digits + 6), prec);
    return div(numerator, denom, prec);
}

NumericCheck check_identity_numeric(const RamanujanFormula& formula, std::size_t digits,
                                    unsigned threads) {
    if (digits < 10)
        throw std::invalid_argument("check_identity_numeric: digits must be at least 10");
    const std::size_t work = digits + 10;
    const BigFloat lhs = eval_formula(formula, work, SumStrategy::binary_split, threads).value;
    const BigFloat rhs = claimed_value(formula, work);
    const Rational residual = residual_bound(lhs, rhs);
    NumericCheck out;
    out.residual_bound_exponent = decimal_exponent_bound(residual);
    out.pass = residual < pow10(5 - static_cast<long>(digits));
    return out;
}

BigFloat extract_pi(const RamanujanFormula& formula, std::size_t digits, unsigned threads) {
    const std::size_t work = digits + 10;
    const long prec = bits_for_digits(work);
    const ClaimedValue& c = formula.claimed;
    const BigFloat sum = eval_formula(formula, work, SumStrategy::binary_split, threads).value;
    BigFloat numerator = BigFloat::from_rational(c.s, prec);
    if (c.d != 1)
        numerator = mul(numerator, sqrt_int(c.d, work), prec);
    if (c.extra_sqrt_denom)
        numerator = div(numerator, sqrt_int(*c.extra_sqrt_denom, work), prec);
    const BigFloat ratio = div(numerator, sum, prec); // pi^pi_power
    return c.pi_power == 2 ? sqrt(ratio, prec) : ratio;
}

} // namespace hyperpi
