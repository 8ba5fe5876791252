#pragma once

#include <vector>

#include "wente/bubble.hpp"
#include "wente/core.hpp"

namespace wente {

/// Annular-polar quadrature patch on the upper half-plane H, centered at the
/// concentration point z = 0, with geometric radial grading down to eps/16.
/// Carries two weight sets: the full cell area (integrals over H) and the
/// cell area clipped to the translated disc D' = D + i (integrals over D,
/// evaluated in half-plane coordinates z = w + i).
struct HalfPlanePatch {
    double epsilon = 0.0;
    double r_outer = 0.0;
    int n_rings = 0;
    int n_theta = 0;

    std::vector<complex_t> z;         // node positions, size n_rings*n_theta
    std::vector<double> weight_h;     // full cell areas
    std::vector<double> weight_disc;  // cell areas clipped to D'

    std::size_t size() const { return z.size(); }
    /// Disc coordinate of node n (radius clamped to the closed disc, so
    /// harmonic monomials stay bounded on boundary-straddling cells).
    Vec2 disc_point(std::size_t n) const {
        complex_t w = z[n] - complex_t(0.0, 1.0);
        double r = std::abs(w);
        if (r > 1.0) w /= r;
        return {w.real(), w.imag()};
    }
};

HalfPlanePatch make_halfplane_patch(double epsilon, double r_outer,
                                    int cells_per_octave = 24, int n_theta = 96);

/// |m'_eps| sampled at patch nodes.
std::vector<double> sample_mprime_abs(const HalfPlanePatch& p, double epsilon);

/// Full Jacobian density da ^ db (concentrating + remainder) at patch nodes.
std::vector<double> sample_jacobian(const HalfPlanePatch& p, const BubbleSpec& spec);

/// |grad a|^2 + |grad b|^2 at patch nodes.
std::vector<double> sample_gradV_sq(const HalfPlanePatch& p, const BubbleSpec& spec);

}  // namespace wente
