#include "wente/polar_grid.hpp"

#include <cmath>

namespace wente {

void parallel_for_ranges(std::size_t n,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t nthreads = std::max(1u, hw);
    if (n < 2 * nthreads) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        std::size_t b = t * chunk, e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& th : pool) th.join();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    parallel_for_ranges(n, [&fn](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) fn(i);
    });
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kBottomAngle = -1.5707963267948966;  // theta of -e2

// Angular cell edges on [-pi/2 - pi, -pi/2 + pi], graded toward -pi/2.
std::vector<double> angle_edges(int n_theta, double grading) {
    std::vector<double> edges(n_theta + 1);
    if (grading == 0.0) {
        for (int j = 0; j <= n_theta; ++j)
            edges[j] = kTwoPi * j / n_theta;
        return edges;
    }
    double p = 1.0 + grading;
    for (int j = 0; j <= n_theta; ++j) {
        double eta = 2.0 * j / n_theta - 1.0;  // [-1, 1]
        double s = eta < 0 ? -1.0 : 1.0;
        edges[j] = kBottomAngle + s * M_PI * std::pow(std::abs(eta), p);
    }
    return edges;
}

PolarGrid build(int n_r, int n_theta, double radial_grading, double angular_grading) {
    if (n_r < 4 || n_theta < 4)
        throw domain_error_t("make_polar_grid: n_r and n_theta must be >= 4");
    PolarGrid g;
    g.n_r = n_r;
    g.n_theta = n_theta;
    g.radial_grading = radial_grading;
    g.angular_grading = angular_grading;

    g.radial_edges.resize(n_r + 1);
    if (radial_grading == 0.0) {
        for (int i = 0; i <= n_r; ++i)
            g.radial_edges[i] = std::sqrt(static_cast<double>(i) / n_r);
    } else {
        double p = 1.0 + radial_grading;
        for (int i = 0; i <= n_r; ++i) {
            double xi = static_cast<double>(i) / n_r;
            g.radial_edges[i] = 1.0 - std::pow(1.0 - xi, p);
        }
    }
    g.radii.resize(n_r);
    for (int i = 0; i < n_r; ++i)
        g.radii[i] = 0.5 * (g.radial_edges[i] + g.radial_edges[i + 1]);

    auto aedges = angle_edges(n_theta, angular_grading);
    g.angles.resize(n_theta);
    g.angle_widths.resize(n_theta);
    for (int j = 0; j < n_theta; ++j) {
        g.angles[j] = 0.5 * (aedges[j] + aedges[j + 1]);
        g.angle_widths[j] = aedges[j + 1] - aedges[j];
    }

    g.weights.resize(g.size());
    for (int i = 0; i < n_r; ++i) {
        double ring = 0.5 * (g.radial_edges[i + 1] * g.radial_edges[i + 1] -
                             g.radial_edges[i] * g.radial_edges[i]);
        for (int j = 0; j < n_theta; ++j)
            g.weights[g.index(i, j)] = ring * g.angle_widths[j];
    }
    return g;
}

}  // namespace

PolarGrid make_polar_grid(int n_r, int n_theta, double grading) {
    return build(n_r, n_theta, grading, grading);
}

PolarGrid make_solver_grid(int n_r, int n_theta, double radial_grading) {
    return build(n_r, n_theta, radial_grading, 0.0);
}

ScalarField make_field(const PolarGrid& g) {
    ScalarField f;
    f.grid = &g;
    f.values.assign(g.size(), 0.0);
    return f;
}

ScalarField make_field(const PolarGrid& g, const std::function<double(Vec2)>& fn) {
    ScalarField f = make_field(g);
    for (int i = 0; i < g.n_r; ++i)
        for (int j = 0; j < g.n_theta; ++j)
            f.at(i, j) = fn(g.point(i, j));
    return f;
}

double integrate(const ScalarField& f) {
    if (!f.grid || f.values.size() != f.grid->size())
        throw domain_error_t("integrate: field not bound to its grid");
    double s = 0.0;
    for (std::size_t n = 0; n < f.values.size(); ++n)
        s += f.values[n] * f.grid->weights[n];
    return s;
}

double integrate_product(const ScalarField& a, const ScalarField& b) {
    if (a.grid != b.grid)
        throw domain_error_t("integrate_product: fields on different grids");
    double s = 0.0;
    for (std::size_t n = 0; n < a.values.size(); ++n)
        s += a.values[n] * b.values[n] * a.grid->weights[n];
    return s;
}

std::vector<double> boundary_trace(const ScalarField& f) {
    const PolarGrid& g = *f.grid;
    std::vector<double> tr(g.n_theta);
    int n = g.n_r;
    double r0 = g.radii[n - 3], r1 = g.radii[n - 2], r2 = g.radii[n - 1];
    // quadratic extrapolation to r=1
    double l0 = (1 - r1) * (1 - r2) / ((r0 - r1) * (r0 - r2));
    double l1 = (1 - r0) * (1 - r2) / ((r1 - r0) * (r1 - r2));
    double l2 = (1 - r0) * (1 - r1) / ((r2 - r0) * (r2 - r1));
    for (int j = 0; j < g.n_theta; ++j)
        tr[j] = l0 * f.at(n - 3, j) + l1 * f.at(n - 2, j) + l2 * f.at(n - 1, j);
    return tr;
}

GradField gradient_fd(const ScalarField& f) {
    const PolarGrid& g = *f.grid;
    GradField gr;
    gr.grid = &g;
    gr.gx.assign(g.size(), 0.0);
    gr.gy.assign(g.size(), 0.0);
    int nr = g.n_r, nt = g.n_theta;
    for (int i = 0; i < nr; ++i) {
        for (int j = 0; j < nt; ++j) {
            double dr;
            if (i == 0) {
                dr = (f.at(1, j) - f.at(0, j)) / (g.radii[1] - g.radii[0]);
            } else if (i == nr - 1) {
                dr = (f.at(nr - 1, j) - f.at(nr - 2, j)) /
                     (g.radii[nr - 1] - g.radii[nr - 2]);
            } else {
                double hm = g.radii[i] - g.radii[i - 1];
                double hp = g.radii[i + 1] - g.radii[i];
                dr = (hm * hm * f.at(i + 1, j) - hp * hp * f.at(i - 1, j) +
                      (hp * hp - hm * hm) * f.at(i, j)) /
                     (hm * hp * (hm + hp));
            }
            int jm = (j + nt - 1) % nt, jp = (j + 1) % nt;
            double hm = g.angles[j] - g.angles[jm];
            double hp = g.angles[jp] - g.angles[j];
            if (hm <= 0) hm += kTwoPi;
            if (hp <= 0) hp += kTwoPi;
            double dth = (hm * hm * f.at(i, jp) - hp * hp * f.at(i, jm) +
                          (hp * hp - hm * hm) * f.at(i, j)) /
                         (hm * hp * (hm + hp));
            double r = g.radii[i], th = g.angles[j];
            double c = std::cos(th), s = std::sin(th);
            gr.gx[g.index(i, j)] = c * dr - s * dth / r;
            gr.gy[g.index(i, j)] = s * dr + c * dth / r;
        }
    }
    return gr;
}

double inner_energy_fd(const ScalarField& u, const ScalarField& v) {
    if (u.grid != v.grid)
        throw domain_error_t("inner_energy_fd: fields on different grids");
    GradField gu = gradient_fd(u), gv = gradient_fd(v);
    double s = 0.0;
    for (std::size_t n = 0; n < u.values.size(); ++n)
        s += (gu.gx[n] * gv.gx[n] + gu.gy[n] * gv.gy[n]) * u.grid->weights[n];
    return s;
}

}  // namespace wente
