#pragma once

#include <vector>

#include "wente/core.hpp"
#include "wente/polar_grid.hpp"

namespace wente {

/// Radial profile of one angular Fourier mode. For real fields only k >= 0 is
/// stored; the k < 0 profile is the conjugate.
struct ModeProfile {
    int k = 0;
    std::vector<complex_t> values;  // one entry per radial node
};

/// Dirichlet-to-Neumann map on boundary Fourier coefficients: g_k -> |k| g_k,
/// zero on the mean. Self-adjoint and nonnegative on the mean-zero subspace.
struct DtNOperator {
    double symbol(int k) const { return std::abs(static_cast<double>(k)); }
    std::vector<complex_t> apply(const std::vector<complex_t>& coeffs) const {
        std::vector<complex_t> out(coeffs.size());
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            out[k] = symbol(static_cast<int>(k)) * coeffs[k];
        if (!out.empty()) out[0] = 0.0;
        return out;
    }
};

/// Per-ring DFT of a field on a uniform-theta grid; modes k = 0..K.
/// Requires grid.uniform_theta() and n_theta >= 2K + 2.
std::vector<ModeProfile> fourier_modes(const ScalarField& f, int K);

/// Reassembles a real field from non-negative-k mode profiles.
ScalarField assemble_modes(const PolarGrid& g, const std::vector<ModeProfile>& modes);

/// Fraction of the field's quadrature L2 energy carried by the top stored mode;
/// above ~1% the angular resolution is too small for the data.
double top_mode_energy_fraction(const PolarGrid& g, const std::vector<ModeProfile>& modes);

/// -Laplace u = f, u = 0 on the boundary. Fourier in theta, second-order
/// flux-form differences in r, regularity at r = 0 by the vanishing-flux
/// closure.
ScalarField solve_dirichlet_spectral(const ScalarField& f);

/// -Laplace u = f with the compatible constant flux du/dnu = -(1/2pi) int f,
/// zero disc mean.
ScalarField solve_neumann_spectral(const ScalarField& f);

/// Zero-mean harmonic h with dh/dnu = g on the boundary; g given as samples at
/// the grid's angular nodes. Throws if |mean(g)| exceeds mean_tol * max|g|.
ScalarField harmonic_from_neumann(const PolarGrid& g, const std::vector<double>& samples,
                                  double mean_tol = 1e-6);

/// Same, from boundary Fourier coefficients g_k (k = 0..K; g_0 ignored must be ~0).
ScalarField harmonic_from_coeffs(const PolarGrid& g, const std::vector<complex_t>& coeffs);

/// Dirichlet solve -> distributional boundary flux -> harmonic correction:
/// v = u - h solves the Neumann problem up to an additive constant (pinned to
/// zero disc mean here).
struct NeumannCorrection {
    ScalarField u;  // Dirichlet solution
    ScalarField h;  // harmonic with the mean-free flux of u
    ScalarField v;  // u - h, zero mean
};
NeumannCorrection neumann_via_correction(const ScalarField& f);

/// Energy ||grad u||_L2^2 from mode profiles (Parseval over modes, quadrature
/// in r).
double mode_energy(const PolarGrid& g, const std::vector<ModeProfile>& modes);

/// ||grad h||^2 of the harmonic extension with flux coefficients g_k:
/// 4 pi * sum_{k >= 1} |g_k|^2 / k (one-sided coefficients of a real flux).
double harmonic_energy_from_coeffs(const std::vector<complex_t>& coeffs);

}  // namespace wente
