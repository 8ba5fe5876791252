#pragma once

#include <vector>

#include "wente/core.hpp"
#include "wente/polar_grid.hpp"

namespace wente {

/// One concentrating field pair V_eps = (a, b) on the disc.
///
/// The fields are built from the Moebius transform m_eps(z) = (z - i eps)/(z + i eps)
/// of the upper half-plane H onto the disc, evaluated at z = w + i for a disc
/// point w (so the concentration point is w = -e2), multiplied by a radial C^2
/// cutoff in |z| that is identically 1 up to cutoff_inner * r0 and vanishes
/// beyond r0.
struct BubbleSpec {
    double epsilon = 0.1;
    double r0 = 0.5;
    double cutoff_inner = 0.5;

    void validate() const {
        if (!(epsilon > 0.0)) throw domain_error_t("BubbleSpec: epsilon must be > 0");
        if (!(r0 > 0.0 && r0 < 2.0)) throw domain_error_t("BubbleSpec: r0 must be in (0,2)");
        if (!(cutoff_inner > 0.0 && cutoff_inner < 1.0))
            throw domain_error_t("BubbleSpec: cutoff_inner must be in (0,1)");
    }
};

struct MobiusValue {
    complex_t value;
    complex_t derivative;
};

/// m_eps(z) and m'_eps(z). Throws on the pole z = -i eps (below H).
MobiusValue mobius_eval(complex_t z, double epsilon);

/// Inverse transform, i eps (w + 1)/(1 - w). Throws at w = 1.
complex_t mobius_inverse(complex_t w, double epsilon);

/// Radial quintic-smoothstep cutoff profile and its gradient at z (half-plane
/// coordinates). value = 1 for |z| <= cutoff_inner*r0, 0 for |z| >= r0.
struct CutoffValue {
    double value;
    Vec2 gradient;
};
CutoffValue cutoff(complex_t z, const BubbleSpec& spec);

/// a, b and their exact analytic gradients at a single disc point w.
struct BubblePoint {
    double a, b;
    Vec2 grad_a, grad_b;
};
BubblePoint bubble_eval(Vec2 w, const BubbleSpec& spec);

struct BubbleFields {
    ScalarField a, b;
    GradField grad_a, grad_b;
};
BubbleFields bubble_fields(const BubbleSpec& spec, const PolarGrid& grid);

/// Jacobian density split: da ^ db = concentrating + remainder, where
/// concentrating = phi^2 |m'|^2 and remainder is the cutoff cross-term.
struct JacobianPoint {
    double concentrating;
    double remainder;
};
JacobianPoint jacobian_eval(Vec2 w, const BubbleSpec& spec);

struct JacobianSplit {
    ScalarField concentrating;
    ScalarField remainder;
};
JacobianSplit jacobian_density(const BubbleSpec& spec, const PolarGrid& grid);

/// Radius of the superlevel set { z in H : |m'_eps(z)| >= t } = B_r(-i eps) cap H,
/// r(t) = sqrt(2 eps / t). Throws for t <= 0.
double superlevel_radius(double t, double epsilon);

/// Exact area of B_{r(t)}(-i eps) cap H (circular segment above the line
/// Im z = 0 through a ball centered eps below it). Zero once r(t) <= eps.
double exact_distribution(double t, double epsilon);

}  // namespace wente
