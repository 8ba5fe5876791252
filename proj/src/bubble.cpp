#include "wente/bubble.hpp"

#include <cmath>

namespace wente {

namespace {

double smoothstep5(double u) { return u * u * u * (10.0 + u * (-15.0 + 6.0 * u)); }
double dsmoothstep5(double u) { return 30.0 * u * u * (1.0 - u) * (1.0 - u); }

}  // namespace

MobiusValue mobius_eval(complex_t z, double epsilon) {
    complex_t den = z + complex_t(0.0, epsilon);
    if (std::abs(den) == 0.0)
        throw domain_error_t("mobius_eval: pole at z = -i eps");
    MobiusValue out;
    out.value = (z - complex_t(0.0, epsilon)) / den;
    out.derivative = complex_t(0.0, 2.0 * epsilon) / (den * den);
    return out;
}

complex_t mobius_inverse(complex_t w, double epsilon) {
    complex_t den = 1.0 - w;
    if (std::abs(den) == 0.0)
        throw domain_error_t("mobius_inverse: w = 1 maps to infinity");
    return complex_t(0.0, epsilon) * (w + 1.0) / den;
}

CutoffValue cutoff(complex_t z, const BubbleSpec& spec) {
    double rho = std::abs(z);
    double r_in = spec.cutoff_inner * spec.r0;
    CutoffValue out{1.0, {0.0, 0.0}};
    if (rho <= r_in) return out;
    if (rho >= spec.r0) {
        out.value = 0.0;
        return out;
    }
    double u = (rho - r_in) / (spec.r0 - r_in);
    out.value = 1.0 - smoothstep5(u);
    double dv = -dsmoothstep5(u) / (spec.r0 - r_in);
    out.gradient = {dv * z.real() / rho, dv * z.imag() / rho};
    return out;
}

BubblePoint bubble_eval(Vec2 w, const BubbleSpec& spec) {
    complex_t z(w.x, w.y + 1.0);  // shift onto the translated disc D' = D + i
    double rho = std::abs(z);
    BubblePoint out{0.0, 0.0, {0.0, 0.0}, {0.0, 0.0}};
    if (rho >= spec.r0) return out;

    MobiusValue m = mobius_eval(z, spec.epsilon);
    CutoffValue ph = cutoff(z, spec);
    double re = m.value.real() - 1.0, im = m.value.imag();
    double rep = m.derivative.real(), imp = m.derivative.imag();
    out.a = ph.value * re;
    out.b = ph.value * im;
    // holomorphic F = m - 1: grad Re F = (Re F', -Im F'), grad Im F = (Im F', Re F')
    out.grad_a = {re * ph.gradient.x + ph.value * rep,
                  re * ph.gradient.y - ph.value * imp};
    out.grad_b = {im * ph.gradient.x + ph.value * imp,
                  im * ph.gradient.y + ph.value * rep};
    return out;
}

BubbleFields bubble_fields(const BubbleSpec& spec, const PolarGrid& grid) {
    spec.validate();
    BubbleFields out;
    out.a = make_field(grid);
    out.b = make_field(grid);
    out.grad_a.grid = &grid;
    out.grad_b.grid = &grid;
    out.grad_a.gx.assign(grid.size(), 0.0);
    out.grad_a.gy.assign(grid.size(), 0.0);
    out.grad_b.gx.assign(grid.size(), 0.0);
    out.grad_b.gy.assign(grid.size(), 0.0);
    for (int i = 0; i < grid.n_r; ++i) {
        for (int j = 0; j < grid.n_theta; ++j) {
            BubblePoint p = bubble_eval(grid.point(i, j), spec);
            std::size_t n = grid.index(i, j);
            out.a.values[n] = p.a;
            out.b.values[n] = p.b;
            out.grad_a.gx[n] = p.grad_a.x;
            out.grad_a.gy[n] = p.grad_a.y;
            out.grad_b.gx[n] = p.grad_b.x;
            out.grad_b.gy[n] = p.grad_b.y;
        }
    }
    return out;
}

JacobianPoint jacobian_eval(Vec2 w, const BubbleSpec& spec) {
    complex_t z(w.x, w.y + 1.0);
    double rho = std::abs(z);
    if (rho >= spec.r0) return {0.0, 0.0};
    MobiusValue m = mobius_eval(z, spec.epsilon);
    CutoffValue ph = cutoff(z, spec);
    double mp2 = std::norm(m.derivative);
    JacobianPoint out;
    out.concentrating = ph.value * ph.value * mp2;
    // cross-term phi dphi ^ [(Re m - 1) dIm m - Im m dRe m]
    double re = m.value.real() - 1.0, im = m.value.imag();
    double rep = m.derivative.real(), imp = m.derivative.imag();
    double wx = re * imp - im * rep;           // omega_x
    double wy = re * rep + im * imp;           // omega_y
    out.remainder = ph.value * (ph.gradient.x * wy - ph.gradient.y * wx);
    return out;
}

JacobianSplit jacobian_density(const BubbleSpec& spec, const PolarGrid& grid) {
    spec.validate();
    JacobianSplit out;
    out.concentrating = make_field(grid);
    out.remainder = make_field(grid);
    for (int i = 0; i < grid.n_r; ++i) {
        for (int j = 0; j < grid.n_theta; ++j) {
            JacobianPoint p = jacobian_eval(grid.point(i, j), spec);
            std::size_t n = grid.index(i, j);
            out.concentrating.values[n] = p.concentrating;
            out.remainder.values[n] = p.remainder;
        }
    }
    return out;
}

double superlevel_radius(double t, double epsilon) {
    if (!(t > 0.0)) throw domain_error_t("superlevel_radius: t must be > 0");
    return std::sqrt(2.0 * epsilon / t);
}

double exact_distribution(double t, double epsilon) {
    if (!(t > 0.0)) throw domain_error_t("exact_distribution: t must be > 0");
    double r = superlevel_radius(t, epsilon);
    if (r <= epsilon) return 0.0;
    return r * r * std::acos(epsilon / r) -
           epsilon * std::sqrt(r * r - epsilon * epsilon);
}

}  // namespace wente
