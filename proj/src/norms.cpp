#include "wente/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wente {

namespace {

// Sorted |values| (descending) with cumulative weights; mu(t) by binary search.
struct SortedDensity {
    std::vector<double> vals;    // descending
    std::vector<double> cumw;    // cumulative weight up to and including vals[i]
    double l1 = 0.0;

    explicit SortedDensity(SampledDensity f) {
        std::vector<std::size_t> idx(f.values.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return std::abs(f.values[a]) > std::abs(f.values[b]);
        });
        vals.resize(idx.size());
        cumw.resize(idx.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            double v = std::abs(f.values[idx[i]]);
            double w = f.weights[idx[i]];
            vals[i] = v;
            acc += w;
            cumw[i] = acc;
            l1 += v * w;
        }
    }

    double mu(double t) const {
        // total weight with value strictly greater than t
        auto it = std::upper_bound(vals.begin(), vals.end(), t, std::greater<>());
        std::size_t n = static_cast<std::size_t>(it - vals.begin());
        return n == 0 ? 0.0 : cumw[n - 1];
    }
};

}  // namespace

double lp_norm(SampledDensity f, double p) {
    if (p < 1.0) throw domain_error_t("lp_norm: p must be >= 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : f.values) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        s += std::pow(std::abs(f.values[i]), p) * f.weights[i];
    return std::pow(s, 1.0 / p);
}

double lp_norm(const ScalarField& f, double p) { return lp_norm(density_of(f), p); }

double distribution_function(SampledDensity f, double t) {
    if (t < 0.0) throw domain_error_t("distribution_function: t must be >= 0");
    double s = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        if (std::abs(f.values[i]) > t) s += f.weights[i];
    return s;
}

double distribution_function(const ScalarField& f, double t) {
    return distribution_function(density_of(f), t);
}

double lorentz21(SampledDensity f, double tol) {
    SortedDensity sd(f);
    if (sd.vals.empty() || sd.vals.front() == 0.0) return 0.0;
    double linf = sd.vals.front();
    const double ratio = std::pow(2.0, 1.0 / 8.0);
    const double t_floor = linf * 1e-8;

    double acc = 0.0;
    double t_hi = linf;
    double mu_hi = 0.0;  // mu(linf) = 0 (strict inequality)
    while (t_hi > t_floor) {
        double t_lo = t_hi / ratio;
        double mu_lo = sd.mu(t_lo);
        acc += 0.5 * (std::sqrt(mu_hi) + std::sqrt(mu_lo)) * (t_hi - t_lo);
        t_hi = t_lo;
        mu_hi = mu_lo;
        double tail_bound = 2.0 * std::sqrt(sd.l1 * t_hi);  // int_0^t sqrt(l1/s) ds
        if (acc > 0.0 && tail_bound < tol * acc) break;
    }
    // remaining piece down to zero: mu is constant (= total weight) below the
    // smallest sample, so integrate it exactly
    acc += std::sqrt(mu_hi) * t_hi;
    return 2.0 * acc;
}

double lorentz21(const ScalarField& f, double tol) {
    return lorentz21(density_of(f), tol);
}

double hminus1(const ScalarField& f, const PoissonSolver& solver) {
    ScalarField u = solver(f);
    return std::sqrt(std::max(0.0, inner_energy_fd(u, u)));
}

double layer_cake_l2sq(SampledDensity f) {
    SortedDensity sd(f);
    if (sd.vals.empty() || sd.vals.front() == 0.0) return 0.0;
    // 2 int_0^linf t mu(t) dt over the exact step function of the samples
    double acc = 0.0;
    for (std::size_t i = 0; i < sd.vals.size(); ++i) {
        double hi = sd.vals[i];
        double lo = (i + 1 < sd.vals.size()) ? sd.vals[i + 1] : 0.0;
        acc += sd.cumw[i] * 0.5 * (hi * hi - lo * lo);
    }
    return 2.0 * acc;
}

}  // namespace wente
