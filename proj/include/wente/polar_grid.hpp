#pragma once

#include <span>
#include <vector>

#include "wente/core.hpp"

namespace wente {

/// Tensor quadrature grid on the unit disc. Nodes live strictly inside the
/// disc at radial cell centers; weights are exact cell areas, so constants
/// integrate to pi at machine precision.
///
/// grading > 0 clusters radial nodes toward r = 1 and angular nodes toward
/// the boundary point -e2 (theta = -pi/2). Angularly graded grids cannot be
/// used by the Fourier solvers; make_solver_grid keeps theta uniform and
/// grades only in r.
struct PolarGrid {
    int n_r = 0;
    int n_theta = 0;
    double radial_grading = 0.0;
    double angular_grading = 0.0;

    std::vector<double> radii;        // node radius per ring, size n_r
    std::vector<double> radial_edges; // size n_r+1, edges[0]=0, edges[n_r]=1
    std::vector<double> angles;       // node angle per column, size n_theta
    std::vector<double> angle_widths; // angular cell width per column
    std::vector<double> weights;      // node weight, size n_r*n_theta

    std::size_t size() const { return radii.size() * angles.size(); }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * n_theta + j;
    }
    Vec2 point(int i, int j) const {
        return {radii[i] * std::cos(angles[j]), radii[i] * std::sin(angles[j])};
    }
    bool uniform_theta() const { return angular_grading == 0.0; }
};

struct ScalarField {
    const PolarGrid* grid = nullptr;
    std::vector<double> values;

    double& at(int i, int j) { return values[grid->index(i, j)]; }
    double at(int i, int j) const { return values[grid->index(i, j)]; }
};

struct GradField {
    const PolarGrid* grid = nullptr;
    std::vector<double> gx, gy;
};

/// n_r, n_theta >= 4. grading = 0 gives the equal-area (midpoint in r^2,
/// trapezoid in theta) composite rule.
PolarGrid make_polar_grid(int n_r, int n_theta, double grading = 0.0);

/// Uniform-theta grid with power-law radial clustering toward r = 1
/// (exponent 1 + radial_grading); suitable for the Fourier-mode solvers.
PolarGrid make_solver_grid(int n_r, int n_theta, double radial_grading);

ScalarField make_field(const PolarGrid& g);
ScalarField make_field(const PolarGrid& g, const std::function<double(Vec2)>& f);

double integrate(const ScalarField& f);
double integrate_product(const ScalarField& a, const ScalarField& b);

/// Samples f on partial D by quadratic radial extrapolation of the last three
/// rings; returns one value per angular column. Boundary quadrature weight for
/// column j is the angular cell width.
std::vector<double> boundary_trace(const ScalarField& f);

/// Centered non-uniform differences in (r, theta), mapped to Cartesian
/// components. One-sided at the first and last ring.
GradField gradient_fd(const ScalarField& f);

/// Energy inner product int grad u . grad v via FD gradients.
double inner_energy_fd(const ScalarField& u, const ScalarField& v);

}  // namespace wente
