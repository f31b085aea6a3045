#include "cgl/semigroup.hpp"

#include <cmath>
#include <numbers>

namespace cgl {

SpectralField apply_laplacian_drift(const SpectralField& u, const ModelParams& p) {
    const double pi = std::numbers::pi;
    SpectralField r = u;
    for (int k = 1; k <= r.n_modes(); ++k) {
        const double mu_k = (k * pi) * (k * pi);
        r[k] *= Complex(-p.beta * mu_k, -mu_k);
    }
    return r;
}

std::vector<Complex> semigroup_factors(int n_modes, double t, const ModelParams& p) {
    if (t < 0.0) {
        throw NegativeTime("semigroup time must be >= 0, got " + std::to_string(t));
    }
    const double pi = std::numbers::pi;
    std::vector<Complex> f(static_cast<std::size_t>(n_modes));
    for (int k = 1; k <= n_modes; ++k) {
        const double mu_k = (k * pi) * (k * pi);
        f[static_cast<std::size_t>(k - 1)] =
            std::exp(Complex(-p.beta * mu_k * t, -mu_k * t));
    }
    return f;
}

SpectralField semigroup_apply(const SpectralField& u, double t, const ModelParams& p) {
    const std::vector<Complex> f = semigroup_factors(u.n_modes(), t, p);
    SpectralField r = u;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] *= f[i];
    return r;
}

} // namespace cgl
