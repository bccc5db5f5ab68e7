#include "hyperpi/hypergeometric.hpp"

#include "hyperpi/sequences.hpp"

#include <stdexcept>

namespace hyperpi {

namespace {

bool is_zero_or_negative_integer(const Rational& q) {
    return q.is_integer() && q.sign() <= 0;
}

void require_valid_lower(const Rational& q, const char* what) {
    if (is_zero_or_negative_integer(q))
        throw std::invalid_argument(std::string(what) +
                                    ": lower parameter is zero or a negative integer");
}

} // namespace

HypergeometricSpec::HypergeometricSpec(std::vector<Rational> upper, std::vector<Rational> lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
    if (upper_.size() != lower_.size() + 1)
        throw std::invalid_argument("HypergeometricSpec: expected q+1 upper and q lower parameters");
    for (const auto& b : lower_)
        require_valid_lower(b, "HypergeometricSpec");
}

Series hypergeometric_series(const HypergeometricSpec& spec, std::size_t order) {
    Series s(order);
    Rational term(1);
    for (std::size_t n = 0; n < order; ++n) {
        s[n] = term;
        const Rational nn(static_cast<long>(n));
        for (const auto& a : spec.upper())
            term *= a + nn;
        term /= Rational(static_cast<long>(n) + 1);
        for (const auto& b : spec.lower())
            term /= b + nn;
    }
    return s;
}

TransformId transform_from_string(const std::string& name) {
    if (name == "gauss") return TransformId::gauss;
    if (name == "whipple") return TransformId::whipple;
    if (name == "theorem1") return TransformId::theorem1;
    if (name == "theorem2") return TransformId::theorem2;
    if (name == "eq10") return TransformId::eq10;
    if (name == "orr") return TransformId::orr;
    throw std::invalid_argument("unknown transform id: " + name);
}

std::string to_string(TransformId id) {
    switch (id) {
    case TransformId::gauss: return "gauss";
    case TransformId::whipple: return "whipple";
    case TransformId::theorem1: return "theorem1";
    case TransformId::theorem2: return "theorem2";
    case TransformId::eq10: return "eq10";
    case TransformId::orr: return "orr";
    }
    throw std::logic_error("bad TransformId");
}

namespace {

void require_params(const std::vector<Rational>& params, std::size_t n, const char* id) {
    if (params.size() != n)
        throw std::invalid_argument(std::string(id) + ": expected " + std::to_string(n) +
                                    " parameters, got " + std::to_string(params.size()));
}

Series prefactor_pow(const Rational& exponent, std::size_t order) {
    return pow_rational(Series::one_minus_z(order), exponent);
}

// Coefficients g_n = (a/2)_n ((1+a)/2)_n / ((1+a-b)_n (1+a-c)_n), the outer
// weight shared by the five-parameter transform and its Orr form.
std::vector<Rational> outer_weights(const Rational& a, const Rational& b, const Rational& c,
                                    std::size_t order) {
    const Rational half_a = a / Rational(2);
    const Rational half_a1 = (a + Rational(1)) / Rational(2);
    const Rational l1 = Rational(1) + a - b;
    const Rational l2 = Rational(1) + a - c;
    require_valid_lower(l1, "transform");
    require_valid_lower(l2, "transform");
    std::vector<Rational> g(order);
    Rational cur(1);
    for (std::size_t n = 0; n < order; ++n) {
        g[n] = cur;
        const Rational nn(static_cast<long>(n));
        cur *= (half_a + nn) * (half_a1 + nn);
        cur /= (l1 + nn) * (l2 + nn);
    }
    return g;
}

// The finite nu-sum of the five-parameter transform, as a convolution of
// two incrementally generated term families.
std::vector<Rational> inner_convolution(const Rational& a, const Rational& b, const Rational& c,
                                        const Rational& d, const Rational& e, std::size_t order) {
    const Rational l3 = Rational(1) + a - d;
    const Rational l4 = Rational(1) + a - e;
    require_valid_lower(l3, "transform");
    require_valid_lower(l4, "transform");
    const Rational top = Rational(1) + a - d - e;
    const Rational cross = Rational(1) + a - b - c;

    std::vector<Rational> tA(order), tB(order);
    Rational curA(1), curB(1);
    for (std::size_t k = 0; k < order; ++k) {
        tA[k] = curA;
        tB[k] = curB;
        const Rational kk(static_cast<long>(k));
        curA *= (b + kk) * (c + kk) * (top + kk);
        curA /= (Rational(1) + kk) * (l3 + kk) * (l4 + kk);
        curB *= (cross + kk) / (Rational(1) + kk);
    }
    std::vector<Rational> inner(order);
    for (std::size_t n = 0; n < order; ++n) {
        Rational sum(0);
        for (std::size_t v = 0; v <= n; ++v)
            sum += tA[v] * tB[n - v];
        inner[n] = sum;
    }
    return inner;
}

Series five_f_four(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                   const Rational& e, std::size_t order) {
    const Rational one(1);
    return hypergeometric_series(
        HypergeometricSpec({a, b, c, d, e},
                           {one + a - b, one + a - c, one + a - d, one + a - e}),
        order);
}

TransformSides gauss_sides(const std::vector<Rational>& p, std::size_t order) {
    const Rational &a = p[0], &b = p[1];
    const Rational lower = Rational(1) + a - b;
    Series lhs = hypergeometric_series(HypergeometricSpec({a, b}, {lower}), order);
    Series inner = hypergeometric_series(
        HypergeometricSpec({a / Rational(2), (a + Rational(1)) / Rational(2) - b}, {lower}), order);
    Series rhs = prefactor_pow(-a, order) * compose(inner, quad_map(order));
    return {std::move(lhs), std::move(rhs), {}};
}

TransformSides whipple_sides(const std::vector<Rational>& p, std::size_t order) {
    const Rational &a = p[0], &b = p[1], &c = p[2];
    const Rational l1 = Rational(1) + a - b;
    const Rational l2 = Rational(1) + a - c;
    Series lhs = hypergeometric_series(HypergeometricSpec({a, b, c}, {l1, l2}), order);
    Series inner = hypergeometric_series(
        HypergeometricSpec({a / Rational(2), (a + Rational(1)) / Rational(2), Rational(1) + a - b - c},
                           {l1, l2}),
        order);
    Series rhs = prefactor_pow(-a, order) * compose(inner, quad_map(order));
    return {std::move(lhs), std::move(rhs), {}};
}

TransformSides theorem1_sides(const std::vector<Rational>& p, std::size_t order) {
    const Rational &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4];
    Series lhs = five_f_four(a, b, c, d, e, order);
    const auto g = outer_weights(a, b, c, order);
    const auto inner = inner_convolution(a, b, c, d, e, order);
    Series w_series(order);
    for (std::size_t n = 0; n < order; ++n)
        w_series[n] = g[n] * inner[n];
    Series rhs = prefactor_pow(-a, order) * compose(w_series, quad_map(order));
    return {std::move(lhs), std::move(rhs), {}};
}

TransformSides orr_sides(const std::vector<Rational>& p, std::size_t order) {
    const Rational &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4];
    Series lhs = five_f_four(a, b, c, d, e, order);
    const Rational l3 = Rational(1) + a - d;
    const Rational l4 = Rational(1) + a - e;
    Series f = prefactor_pow(b + c - a - Rational(1), order) *
               hypergeometric_series(
                   HypergeometricSpec({b, c, Rational(1) + a - d - e}, {l3, l4}), order);
    const auto g = outer_weights(a, b, c, order);
    Series w_series(order);
    for (std::size_t n = 0; n < order; ++n)
        w_series[n] = f[n] * g[n];
    Series rhs = prefactor_pow(-a, order) * compose(w_series, quad_map(order));
    return {std::move(lhs), std::move(rhs), {}};
}

TransformSides theorem2_sides(std::size_t order) {
    const Rational half(1, 2);
    const Rational one(1);
    Series lhs = hypergeometric_series(
        HypergeometricSpec({half, half, half, half, half}, {one, one, one, one}), order);
    const auto u = u_seq(order == 0 ? 0 : order - 1, USmallMethod::convolution);
    Series w_series(order);
    Rational kernel(1); // (1/4)_n (3/4)_n / n!^2
    for (std::size_t n = 0; n < order; ++n) {
        w_series[n] = u[n] * kernel;
        const long k = static_cast<long>(n);
        kernel *= Rational((4 * k + 1) * (4 * k + 3), 16 * (k + 1) * (k + 1));
    }
    Series rhs = prefactor_pow(Rational(-1, 2), order) * compose(w_series, quad_map(order));
    return {std::move(lhs), std::move(rhs), {}};
}

TransformSides eq10_sides(std::size_t order) {
    const Rational one(1);
    const auto u = u_seq(order == 0 ? 0 : order - 1, USmallMethod::convolution);
    Series lhs(order);
    Rational kernel(1); // (1/3)_n (2/3)_n / n!^2
    for (std::size_t n = 0; n < order; ++n) {
        lhs[n] = u[n] * kernel;
        const long k = static_cast<long>(n);
        kernel *= Rational((3 * k + 1) * (3 * k + 2), 9 * (k + 1) * (k + 1));
    }
    Series sq = hypergeometric_series(
        HypergeometricSpec({Rational(1, 6), Rational(1, 2), Rational(5, 6)}, {one, one}), order);
    Series rhs = sq * sq;
    Series quartic_root = hypergeometric_series(
        HypergeometricSpec({Rational(1, 12), Rational(5, 12)}, {one}), order);
    Series sq2 = quartic_root * quartic_root;
    return {std::move(lhs), std::move(rhs), {sq2 * sq2}};
}

} // namespace

TransformSides transform_sides(TransformId id, const std::vector<Rational>& params,
                               std::size_t order) {
    if (order == 0)
        throw std::invalid_argument("transform_sides: order must be positive");
    switch (id) {
    case TransformId::gauss:
        require_params(params, 2, "gauss");
        return gauss_sides(params, order);
    case TransformId::whipple:
        require_params(params, 3, "whipple");
        return whipple_sides(params, order);
    case TransformId::theorem1:
        require_params(params, 5, "theorem1");
        return theorem1_sides(params, order);
    case TransformId::orr:
        require_params(params, 5, "orr");
        return orr_sides(params, order);
    case TransformId::theorem2:
        require_params(params, 0, "theorem2");
        return theorem2_sides(order);
    case TransformId::eq10:
        require_params(params, 0, "eq10");
        return eq10_sides(order);
    }
    throw std::logic_error("bad TransformId");
}

TransformReport verify_transform(TransformId id, const std::vector<Rational>& params,
                                 std::size_t order) {
    const TransformSides sides = transform_sides(id, params, order);
    TransformReport report;
    auto merge = [&report](const SeriesCompare& c) {
        if (!c.equal) {
            report.equal = false;
            if (!report.first_mismatch || *c.first_mismatch < *report.first_mismatch)
                report.first_mismatch = c.first_mismatch;
        }
    };
    merge(compare_series(sides.lhs, sides.rhs));
    for (const auto& extra : sides.extra)
        merge(compare_series(sides.lhs, extra));
    return report;
}

bool pfaff_saalschutz_check(const Rational& a, const Rational& d, const Rational& e,
                            unsigned long n) {
    const Rational l3 = Rational(1) + a - d;
    const Rational l4 = Rational(1) + a - e;
    require_valid_lower(l3, "pfaff_saalschutz_check");
    require_valid_lower(l4, "pfaff_saalschutz_check");
    const Rational top = Rational(1) + a - d - e;
    const Rational neg_n = Rational(-static_cast<long>(n));
    const Rational a_plus_n = a + Rational(static_cast<long>(n));

    Rational sum(0);
    Rational term(1);
    for (unsigned long v = 0; v <= n; ++v) {
        sum += term;
        const Rational vv(static_cast<long>(v));
        term *= (neg_n + vv) * (a_plus_n + vv) * (top + vv);
        term /= (Rational(1) + vv) * (l3 + vv) * (l4 + vv);
    }
    const Rational closed =
        pochhammer(d, n) * pochhammer(e, n) / (pochhammer(l3, n) * pochhammer(l4, n));
    return sum == closed;
}

} // namespace hyperpi
