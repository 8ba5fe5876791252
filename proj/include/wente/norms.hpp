#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>

#include "wente/polar_grid.hpp"

namespace wente {

/// A sampled density: values with matching quadrature weights. Works for both
/// disc fields and half-plane patch samples.
struct SampledDensity {
    std::span<const double> values;
    std::span<const double> weights;
};

inline SampledDensity density_of(const ScalarField& f) {
    return {f.values, f.grid->weights};
}

struct NormReport {
    double linf = 0.0;
    double l2 = 0.0;
    std::map<double, double> lp;
    double l21 = 0.0;
    std::optional<double> hminus1;
};

/// Quadrature p-norm; p = infinity returns max |value|. Throws for p < 1.
double lp_norm(SampledDensity f, double p);
double lp_norm(const ScalarField& f, double p);

/// mu(t) = total weight where |value| > t. Nonincreasing, right-continuous.
double distribution_function(SampledDensity f, double t);
double distribution_function(const ScalarField& f, double t);

/// Lorentz L^{2,1} norm, 2 * int_0^inf mu(t)^{1/2} dt, integrated over a
/// geometric t-ladder (ratio 2^{1/8}) from linf downward; the ladder stops
/// once the tail bound 4*sqrt(l1 * t) drops below tol times the accumulated
/// value (or at linf * 1e-8).
double lorentz21(SampledDensity f, double tol = 1e-6);
double lorentz21(const ScalarField& f, double tol = 1e-6);

/// H^{-1} norm through the dual Dirichlet energy: ||grad u||_L2 where u is
/// the homogeneous-Dirichlet Poisson solution provided by `solver`.
using PoissonSolver = std::function<ScalarField(const ScalarField&)>;
double hminus1(const ScalarField& f, const PoissonSolver& solver);

/// Layer-cake right side, 2 * int t * mu(t) dt, used as an L2 cross-check.
double layer_cake_l2sq(SampledDensity f);

}  // namespace wente
