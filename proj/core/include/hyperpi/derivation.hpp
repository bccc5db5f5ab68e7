// Applies the operator a2*theta^2 + a1*theta + a0 to the transformed
// all-halves series, substitutes a rational point, and normalizes the
// outcome into an integral series for a sqrt(d)/pi^2 constant. Every step
// is rational or algebraic; this module contains no floating point.

#ifndef HYPERPI_DERIVATION_HPP
#define HYPERPI_DERIVATION_HPP

#include "hyperpi/rational.hpp"

#include <array>
#include <string>

namespace hyperpi {

/// A proven evaluation sum (1/2)_n^5/n!^5 (a2 n^2 + a1 n + a0) z0^n = R/pi^2
/// feeding the derivation. validate() enforces |z0| < 1 and
/// |4 z0 / (1-z0)^2| < 1 and names the violated hypothesis.
struct GuilleraInput {
    std::array<Integer, 3> alpha; // a2, a1, a0
    Rational z0;
    Rational rhs; // R

    void validate() const;
};

struct ThetaCoefficients {
    Rational q2, q1, q0;      // exact quadratic in n collected at z = z0
    AlgebraicValue prefactor; // (1 - z0)^{-1/2}, radicand normalized
    Rational x;               // -4 z0 / (1 - z0)^2
};

/// Collects the theta-operator weights
///   theta   -> n (1+z)/(1-z) + z/(2(1-z))
///   theta^2 -> n^2 (1+z)^2/(1-z)^2 + n z(3+z)/(1-z)^2 + z(2+z)/(4(1-z)^2)
/// at z = z0 for the operator a2*theta^2 + a1*theta + a0.
ThetaCoefficients theta_coefficients(const std::array<Integer, 3>& alpha, const Rational& z0);

/// Sum U_n (4n)!/(n!^2 (2n)!) (A n^2 + B n + C) / M^n = S sqrt(d) / pi^2.
/// Quadratic normalized to coprime integers with positive leading nonzero
/// coefficient; the base M is 2^12/x (positive whenever z0 < 0); sqrt(d)
/// is canonical via squarefree decomposition.
struct DerivedFormula {
    Integer quad_a, quad_b, quad_c;
    Rational base;
    Rational s;
    Integer d;

    // "18n^2-10n-3 / 6400^n = 10*sqrt(5)/pi^2"
    std::string to_string() const;
};

DerivedFormula derive_ramanujan(const GuilleraInput& input);

/// Scales a rational quadratic to coprime integers whose first nonzero
/// entry is positive; returns the multiplier lambda with
/// (A,B,C) = lambda * (q2,q1,q0). Exposed for the idempotence check.
struct NormalizedQuadratic {
    Integer a, b, c;
    Rational lambda;
};
NormalizedQuadratic normalize_quadratic(const Rational& q2, const Rational& q1, const Rational& q0);

} // namespace hyperpi

#endif
