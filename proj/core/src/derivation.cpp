#include "hyperpi/derivation.hpp"

#include <stdexcept>

namespace hyperpi {

void GuilleraInput::validate() const {
    if (abs(z0) >= Rational(1))
        throw std::invalid_argument("GuilleraInput: requires |z| < 1");
    const Rational one_minus = Rational(1) - z0;
    const Rational w = Rational(4) * z0 / (one_minus * one_minus);
    if (abs(w) >= Rational(1))
        throw std::invalid_argument("GuilleraInput: requires |4z/(1-z)^2| < 1");
}

ThetaCoefficients theta_coefficients(const std::array<Integer, 3>& alpha, const Rational& z0) {
    if (z0 == Rational(1))
        throw std::invalid_argument("theta_coefficients: z0 = 1");
    const Rational a2(alpha[0]), a1(alpha[1]), a0(alpha[2]);
    const Rational one(1);
    const Rational t = one - z0;
    const Rational t2 = t * t;
    const Rational onep = one + z0;

    ThetaCoefficients out;
    out.q2 = a2 * onep * onep / t2;
    out.q1 = a2 * z0 * (Rational(3) + z0) / t2 + a1 * onep / t;
    out.q0 = a2 * z0 * (Rational(2) + z0) / (Rational(4) * t2) + a1 * z0 / (Rational(2) * t) + a0;

    if (t.sign() <= 0)
        throw std::invalid_argument("theta_coefficients: 1 - z0 must be positive");
    // (1 - z0)^{-1/2} = sqrt(q/p) = sqrt(p q)/p for t = p/q
    out.prefactor = AlgebraicValue(Rational(Integer(1), t.num()), t.num() * t.den());
    out.x = Rational(-4) * z0 / t2;
    return out;
}

NormalizedQuadratic normalize_quadratic(const Rational& q2, const Rational& q1,
                                        const Rational& q0) {
    Integer l = lcm(q2.den(), lcm(q1.den(), q0.den()));
    Integer a = q2.num() * (l / q2.den());
    Integer b = q1.num() * (l / q1.den());
    Integer c = q0.num() * (l / q0.den());
    Integer g = gcd(abs(a), gcd(abs(b), abs(c)));
    if (g == 0)
        throw std::invalid_argument("normalize_quadratic: zero quadratic");
    const Integer* leading = &a;
    if (a == 0)
        leading = b != 0 ? &b : &c;
    if (*leading < 0)
        g = -g;
    a /= g;
    b /= g;
    c /= g;
    return {a, b, c, Rational(l, g)};
}

DerivedFormula derive_ramanujan(const GuilleraInput& input) {
    input.validate();
    const ThetaCoefficients tc = theta_coefficients(input.alpha, input.z0);

    const NormalizedQuadratic q = normalize_quadratic(tc.q2, tc.q1, tc.q0);

    // Absorbing 2^{-6n} from each of u_n and the quarter-parameter kernel
    // turns the term x^n into (x / 2^12)^n = 1/M^n.
    const Rational base = Rational(4096) / tc.x;

    // Moving the (1 - z0)^{-1/2} prefactor across the equality leaves
    // lambda * R * (1 - z0)^{1/2} on the right.
    const Rational t = Rational(1) - input.z0;
    const AlgebraicValue root(Rational(Integer(1), t.den()), t.num() * t.den());
    const AlgebraicValue rhs = (q.lambda * input.rhs) * root;

    DerivedFormula out;
    out.quad_a = q.a;
    out.quad_b = q.b;
    out.quad_c = q.c;
    out.base = base;
    out.s = rhs.coefficient();
    out.d = rhs.radicand();
    return out;
}

namespace {

std::string format_quadratic(const Integer& a, const Integer& b, const Integer& c) {
    std::string s;
    auto append = [&s](const Integer& coeff, const char* power) {
        if (coeff == 0)
            return;
        if (!s.empty() && coeff > 0)
            s += "+";
        if (coeff == -1 && power[0] != '\0')
            s += "-";
        else if (coeff != 1 || power[0] == '\0')
            s += coeff.get_str();
        s += power;
    };
    append(a, "n^2");
    append(b, "n");
    append(c, "");
    if (s.empty())
        s = "0";
    return s;
}

std::string format_rational(const Rational& q) {
    return q.to_string();
}

} // namespace

std::string DerivedFormula::to_string() const {
    std::string right = s.to_string();
    if (d != 1)
        right += "*sqrt(" + d.get_str() + ")";
    return format_quadratic(quad_a, quad_b, quad_c) + " / " + format_rational(base) +
           "^n = " + right + "/pi^2";
}

} // namespace hyperpi
