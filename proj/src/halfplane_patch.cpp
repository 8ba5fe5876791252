#include "wente/halfplane_patch.hpp"

#include <cmath>

namespace wente {

HalfPlanePatch make_halfplane_patch(double epsilon, double r_outer,
                                    int cells_per_octave, int n_theta) {
    if (!(epsilon > 0.0) || !(r_outer > epsilon))
        throw domain_error_t("make_halfplane_patch: need 0 < eps < r_outer");
    HalfPlanePatch p;
    p.epsilon = epsilon;
    p.r_outer = r_outer;
    p.n_theta = n_theta;

    double e0 = epsilon / 16.0;
    int n_geo = static_cast<int>(
        std::ceil(std::log2(r_outer / e0) * cells_per_octave));
    std::vector<double> edges;
    edges.push_back(0.0);
    for (int j = 0; j <= n_geo; ++j)
        edges.push_back(e0 * std::pow(r_outer / e0, double(j) / n_geo));
    p.n_rings = static_cast<int>(edges.size()) - 1;

    double dth = M_PI / n_theta;
    p.z.resize(static_cast<std::size_t>(p.n_rings) * n_theta);
    p.weight_h.resize(p.z.size());
    p.weight_disc.resize(p.z.size());

    for (int i = 0; i < p.n_rings; ++i) {
        double rc = 0.5 * (edges[i] + edges[i + 1]);
        double ring_area = 0.5 * (edges[i + 1] * edges[i + 1] - edges[i] * edges[i]);
        for (int j = 0; j < n_theta; ++j) {
            double th = (j + 0.5) * dth;
            std::size_t n = static_cast<std::size_t>(i) * n_theta + j;
            p.z[n] = rc * complex_t(std::cos(th), std::sin(th));
            p.weight_h[n] = ring_area * dth;

            // clip to D' = {|z - i| <= 1} by 4x4 subsampling; cells whose
            // center is farther from the circle |z - i| = 1 than their own
            // diameter are trivially in or out
            auto inside = [](double r, double t) {
                double x = r * std::cos(t), y = r * std::sin(t) - 1.0;
                return x * x + y * y <= 1.0;
            };
            double cx = rc * std::cos(th), cy = rc * std::sin(th) - 1.0;
            double dist_to_circle = std::abs(std::sqrt(cx * cx + cy * cy) - 1.0);
            double diam = std::hypot(edges[i + 1] - edges[i], edges[i + 1] * dth);
            if (dist_to_circle > diam) {
                p.weight_disc[n] = inside(rc, th) ? p.weight_h[n] : 0.0;
            } else {
                int hit = 0;
                for (int a = 0; a < 4; ++a) {
                    double r2 = edges[i] * edges[i] +
                                (a + 0.5) / 4.0 *
                                    (edges[i + 1] * edges[i + 1] - edges[i] * edges[i]);
                    double rs = std::sqrt(r2);
                    for (int b = 0; b < 4; ++b)
                        hit += inside(rs, (j + (b + 0.5) / 4.0) * dth);
                }
                p.weight_disc[n] = p.weight_h[n] * hit / 16.0;
            }
        }
    }
    return p;
}

std::vector<double> sample_mprime_abs(const HalfPlanePatch& p, double epsilon) {
    std::vector<double> v(p.size());
    for (std::size_t n = 0; n < p.size(); ++n)
        v[n] = std::abs(mobius_eval(p.z[n], epsilon).derivative);
    return v;
}

std::vector<double> sample_jacobian(const HalfPlanePatch& p, const BubbleSpec& spec) {
    std::vector<double> v(p.size());
    for (std::size_t n = 0; n < p.size(); ++n) {
        complex_t w = p.z[n] - complex_t(0.0, 1.0);
        JacobianPoint jp = jacobian_eval({w.real(), w.imag()}, spec);
        v[n] = jp.concentrating + jp.remainder;
    }
    return v;
}

std::vector<double> sample_gradV_sq(const HalfPlanePatch& p, const BubbleSpec& spec) {
    std::vector<double> v(p.size());
    for (std::size_t n = 0; n < p.size(); ++n) {
        complex_t w = p.z[n] - complex_t(0.0, 1.0);
        BubblePoint bp = bubble_eval({w.real(), w.imag()}, spec);
        v[n] = dot(bp.grad_a, bp.grad_a) + dot(bp.grad_b, bp.grad_b);
    }
    return v;
}

}  // namespace wente
