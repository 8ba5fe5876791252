#include "wente/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

namespace wente {

namespace {

std::mutex fftw_plan_mutex;

// Forward r2c DFT of one ring, scaled so out[k] is the Fourier coefficient
// f_k with f(theta) = sum f_k e^{ik theta}.
class RingFFT {
  public:
    explicit RingFFT(int n) : n_(n), in_(n), out_(n / 2 + 1) {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fwd_ = fftw_plan_dft_r2c_1d(n, in_.data(),
                                    reinterpret_cast<fftw_complex*>(out_.data()),
                                    FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(out_.data()),
                                    in_.data(), FFTW_ESTIMATE);
    }
    ~RingFFT() {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
    }
    RingFFT(const RingFFT&) = delete;
    RingFFT& operator=(const RingFFT&) = delete;

    void forward(const double* ring, complex_t* coeffs, int K) {
        for (int j = 0; j < n_; ++j) in_[j] = ring[j];
        fftw_execute(fwd_);
        for (int k = 0; k <= K; ++k) out_[k] /= n_;
        for (int k = 0; k <= K; ++k) coeffs[k] = out_[k];
    }
    // coeffs k=0..K of a real field -> ring samples
    void inverse(const complex_t* coeffs, int K, double* ring) {
        for (int k = 0; k < n_ / 2 + 1; ++k) out_[k] = 0.0;
        for (int k = 0; k <= K; ++k) out_[k] = coeffs[k];
        fftw_execute(bwd_);
        for (int j = 0; j < n_; ++j) ring[j] = in_[j];
    }

  private:
    int n_;
    std::vector<double> in_;
    std::vector<complex_t> out_;
    fftw_plan fwd_, bwd_;
};

void require_uniform(const PolarGrid& g, const char* who) {
    if (!g.uniform_theta())
        throw domain_error_t(std::string(who) + ": requires a uniform-theta grid");
}

// Tridiagonal (Thomas) solve, complex rhs.
void thomas(std::vector<double>& a, std::vector<double>& b, std::vector<double>& c,
            std::vector<complex_t>& d) {
    std::size_t n = b.size();
    for (std::size_t i = 1; i < n; ++i) {
        double m = a[i] / b[i - 1];
        b[i] -= m * c[i - 1];
        d[i] -= m * d[i - 1];
    }
    d[n - 1] /= b[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) d[i] = (d[i] - c[i] * d[i + 1]) / b[i];
}

// One radial mode solve: -(u'' + u'/r - k^2 u / r^2) = f_k, flux form.
// bc: 0 = Dirichlet u(1)=0, 1 = Neumann u'(1)=0 (k != 0 only).
std::vector<complex_t> radial_mode_solve(const PolarGrid& g, int k,
                                         const std::vector<complex_t>& fk, int bc) {
    int n = g.n_r;
    const auto& r = g.radii;
    const auto& e = g.radial_edges;
    std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0);
    std::vector<complex_t> d(fk);
    for (int j = 0; j < n; ++j) {
        double vol = 0.5 * (e[j + 1] * e[j + 1] - e[j] * e[j]);
        double k2 = static_cast<double>(k) * k / (r[j] * r[j]);
        if (j > 0) {
            double flux_in = e[j] / (r[j] - r[j - 1]);
            a[j] -= flux_in / vol;
            b[j] += flux_in / vol;
        }
        if (j < n - 1) {
            double flux_out = e[j + 1] / (r[j + 1] - r[j]);
            b[j] += flux_out / vol;
            c[j] -= flux_out / vol;
        } else if (bc == 0) {
            // outward flux from the quadratic through (r_{n-2}, r_{n-1}, 1) with u(1)=0
            double x0 = r[n - 2], x1 = r[n - 1];
            double L0 = (1.0 - x1) / ((x0 - x1) * (x0 - 1.0));
            double L1 = ((1.0 - x0) + (1.0 - x1)) / ((x1 - x0) * (x1 - 1.0));
            a[j] -= L0 / vol;
            b[j] -= L1 / vol;
        }
        // bc == 1: outward flux is zero, nothing to add
        b[j] += k2;
    }
    thomas(a, b, c, d);
    return d;
}

// k = 0 Neumann mode by direct integration of the flux, zero ring-mean pin.
std::vector<complex_t> radial_mode0_neumann(const PolarGrid& g,
                                            const std::vector<complex_t>& f0) {
    int n = g.n_r;
    const auto& r = g.radii;
    std::vector<complex_t> I(n), u(n);
    // I(r) = int_0^r f s ds, trapezoid with smooth extension through r = 0
    I[0] = f0[0] * (0.5 * r[0] * r[0]);
    for (int j = 1; j < n; ++j)
        I[j] = I[j - 1] + 0.5 * (f0[j - 1] * r[j - 1] + f0[j] * r[j]) * (r[j] - r[j - 1]);
    // u' = -I/r, cumulative trapezoid
    u[0] = 0.0;
    for (int j = 1; j < n; ++j)
        u[j] = u[j - 1] - 0.5 * (I[j - 1] / r[j - 1] + I[j] / r[j]) * (r[j] - r[j - 1]);
    // zero disc mean: mean = 2 * sum u_j vol_j  (area pi divides out)
    complex_t mean = 0.0;
    for (int j = 0; j < n; ++j) {
        double vol = 0.5 * (g.radial_edges[j + 1] * g.radial_edges[j + 1] -
                            g.radial_edges[j] * g.radial_edges[j]);
        mean += 2.0 * u[j] * vol;
    }
    for (int j = 0; j < n; ++j) u[j] -= mean;
    return u;
}

std::vector<complex_t> profile_derivative(const PolarGrid& g,
                                          const std::vector<complex_t>& u) {
    int n = g.n_r;
    const auto& r = g.radii;
    std::vector<complex_t> du(n);
    for (int j = 0; j < n; ++j) {
        if (j == 0) {
            du[j] = (u[1] - u[0]) / (r[1] - r[0]);
        } else if (j == n - 1) {
            du[j] = (u[n - 1] - u[n - 2]) / (r[n - 1] - r[n - 2]);
        } else {
            double hm = r[j] - r[j - 1], hp = r[j + 1] - r[j];
            du[j] = (hm * hm * u[j + 1] - hp * hp * u[j - 1] +
                     (hp * hp - hm * hm) * u[j]) /
                    (hm * hp * (hm + hp));
        }
    }
    return du;
}

}  // namespace

std::vector<ModeProfile> fourier_modes(const ScalarField& f, int K) {
    const PolarGrid& g = *f.grid;
    require_uniform(g, "fourier_modes");
    if (g.n_theta < 2 * K + 2)
        throw domain_error_t("fourier_modes: angular resolution below 2K+2");
    std::vector<ModeProfile> modes(K + 1);
    for (int k = 0; k <= K; ++k) {
        modes[k].k = k;
        modes[k].values.resize(g.n_r);
    }
    RingFFT fft(g.n_theta);
    std::vector<complex_t> coeffs(K + 1);
    for (int i = 0; i < g.n_r; ++i) {
        fft.forward(&f.values[g.index(i, 0)], coeffs.data(), K);
        for (int k = 0; k <= K; ++k) modes[k].values[i] = coeffs[k];
    }
    return modes;
}

ScalarField assemble_modes(const PolarGrid& g, const std::vector<ModeProfile>& modes) {
    require_uniform(g, "assemble_modes");
    ScalarField f = make_field(g);
    int K = static_cast<int>(modes.size()) - 1;
    RingFFT fft(g.n_theta);
    std::vector<complex_t> coeffs(K + 1);
    for (int i = 0; i < g.n_r; ++i) {
        for (int k = 0; k <= K; ++k) coeffs[k] = modes[k].values[i];
        fft.inverse(coeffs.data(), K, &f.values[g.index(i, 0)]);
    }
    return f;
}

double top_mode_energy_fraction(const PolarGrid& g, const std::vector<ModeProfile>& modes) {
    double total = 0.0, top = 0.0;
    int K = static_cast<int>(modes.size()) - 1;
    for (int k = 0; k <= K; ++k) {
        double mass = 0.0;
        for (int j = 0; j < g.n_r; ++j) {
            double vol = 0.5 * (g.radial_edges[j + 1] * g.radial_edges[j + 1] -
                                g.radial_edges[j] * g.radial_edges[j]);
            mass += std::norm(modes[k].values[j]) * vol;
        }
        mass *= (k == 0 ? 1.0 : 2.0);
        total += mass;
        if (k == K) top = mass;
    }
    return total > 0.0 ? top / total : 0.0;
}

ScalarField solve_dirichlet_spectral(const ScalarField& f) {
    const PolarGrid& g = *f.grid;
    int K = g.n_theta / 2 - 1;
    auto modes = fourier_modes(f, K);
    for (int k = 0; k <= K; ++k)
        modes[k].values = radial_mode_solve(g, k, modes[k].values, 0);
    return assemble_modes(g, modes);
}

ScalarField solve_neumann_spectral(const ScalarField& f) {
    const PolarGrid& g = *f.grid;
    int K = g.n_theta / 2 - 1;
    auto modes = fourier_modes(f, K);
    modes[0].values = radial_mode0_neumann(g, modes[0].values);
    for (int k = 1; k <= K; ++k)
        modes[k].values = radial_mode_solve(g, k, modes[k].values, 1);
    return assemble_modes(g, modes);
}

ScalarField harmonic_from_coeffs(const PolarGrid& g, const std::vector<complex_t>& coeffs) {
    require_uniform(g, "harmonic_from_coeffs");
    int K = static_cast<int>(coeffs.size()) - 1;
    std::vector<ModeProfile> modes(K + 1);
    for (int k = 0; k <= K; ++k) {
        modes[k].k = k;
        modes[k].values.assign(g.n_r, 0.0);
        if (k == 0) continue;
        for (int j = 0; j < g.n_r; ++j)
            modes[k].values[j] = coeffs[k] / double(k) * std::pow(g.radii[j], k);
    }
    return assemble_modes(g, modes);
}

ScalarField harmonic_from_neumann(const PolarGrid& g, const std::vector<double>& samples,
                                  double mean_tol) {
    require_uniform(g, "harmonic_from_neumann");
    if (static_cast<int>(samples.size()) != g.n_theta)
        throw domain_error_t("harmonic_from_neumann: sample count != n_theta");
    int K = g.n_theta / 2 - 1;
    RingFFT fft(g.n_theta);
    std::vector<complex_t> coeffs(K + 1);
    fft.forward(samples.data(), coeffs.data(), K);
    double scale = 0.0;
    for (double s : samples) scale = std::max(scale, std::abs(s));
    if (std::abs(coeffs[0]) > mean_tol * std::max(scale, 1e-300))
        throw domain_error_t("harmonic_from_neumann: flux has nonzero mean (incompatible data)");
    coeffs[0] = 0.0;
    return harmonic_from_coeffs(g, coeffs);
}

double mode_energy(const PolarGrid& g, const std::vector<ModeProfile>& modes) {
    double total = 0.0;
    for (const auto& m : modes) {
        auto du = profile_derivative(g, m.values);
        double s = 0.0;
        for (int j = 0; j < g.n_r; ++j) {
            double vol = 0.5 * (g.radial_edges[j + 1] * g.radial_edges[j + 1] -
                                g.radial_edges[j] * g.radial_edges[j]);
            double k2 = static_cast<double>(m.k) * m.k / (g.radii[j] * g.radii[j]);
            s += (std::norm(du[j]) + k2 * std::norm(m.values[j])) * vol;
        }
        total += 2.0 * M_PI * s * (m.k == 0 ? 1.0 : 2.0);
    }
    return total;
}

double harmonic_energy_from_coeffs(const std::vector<complex_t>& coeffs) {
    double s = 0.0;
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        s += std::norm(coeffs[k]) / static_cast<double>(k);
    return 4.0 * M_PI * s;
}

}  // namespace wente
