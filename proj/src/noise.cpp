#include "cgl/noise.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cgl {

NoiseSpec NoiseSpec::make_default(int n_modes, double s1, double s2, double q_decay) {
    NoiseSpec spec;
    spec.sigma1 = s1;
    spec.sigma2 = s2;
    spec.q_eigs1.resize(static_cast<std::size_t>(n_modes));
    spec.q_eigs2.resize(static_cast<std::size_t>(n_modes));
    for (int k = 1; k <= n_modes; ++k) {
        const double w = std::pow(static_cast<double>(k), -q_decay);
        spec.q_eigs1[static_cast<std::size_t>(k - 1)] = w;
        spec.q_eigs2[static_cast<std::size_t>(k - 1)] = w;
    }
    return spec;
}

const std::vector<double>& NoiseSpec::q_eigs(int channel) const {
    return channel == 1 ? q_eigs1 : q_eigs2;
}

double NoiseSpec::trace_q(int channel) const {
    return pairwise_sum(q_eigs(channel));
}

SpectralField wiener_increment(const NoiseSpec& spec, int channel, double dt,
                               const RngStream& rng, const DrawKey& base) {
    if (dt < 0.0) {
        throw NegativeDt("wiener increment needs dt >= 0, got " + std::to_string(dt));
    }
    const std::vector<double>& eigs = spec.q_eigs(channel);
    SpectralField w = SpectralField::zero(static_cast<int>(eigs.size()));
    if (dt == 0.0) return w;

    DrawKey key = base;
    key.stream = static_cast<std::uint32_t>(channel);
    for (int k = 1; k <= w.n_modes(); ++k) {
        key.mode = static_cast<std::uint32_t>(k);
        const auto [z1, z2] = normal_pair(rng, key);
        const double amp = std::sqrt(eigs[static_cast<std::size_t>(k - 1)]);
        if (spec.complex_increments) {
            const double s = std::sqrt(dt / 2.0);
            w[k] = amp * Complex(z1 * s, z2 * s);
        } else {
            w[k] = amp * Complex(z1 * std::sqrt(dt), 0.0);
        }
    }
    return w;
}

double convolution_variance(double sigma, double q_eig, double beta_mu, double h) {
    // sigma^2 lambda (1 - e^{-2 beta mu h}) / (2 beta mu), stable as h -> 0
    const double x = 2.0 * beta_mu * h;
    const double ratio = (x > 1e-8) ? -std::expm1(-x) / (2.0 * beta_mu)
                                    : h * (1.0 - x / 2.0 + x * x / 6.0);
    return sigma * sigma * q_eig * ratio;
}

SpectralField stochastic_convolution_increment(const NoiseSpec& spec, int channel,
                                               double h, const ModelParams& p,
                                               const RngStream& rng, const DrawKey& base) {
    if (h <= 0.0) {
        throw NegativeDt("stochastic convolution needs h > 0, got " + std::to_string(h));
    }
    const double pi = std::numbers::pi;
    const std::vector<double>& eigs = spec.q_eigs(channel);
    const double sigma = spec.sigma(channel);
    SpectralField w = SpectralField::zero(static_cast<int>(eigs.size()));

    DrawKey key = base;
    key.stream = static_cast<std::uint32_t>(channel);
    for (int k = 1; k <= w.n_modes(); ++k) {
        key.mode = static_cast<std::uint32_t>(k);
        const auto [z1, z2] = normal_pair(rng, key);
        const double mu_k = (k * pi) * (k * pi);
        const double v = convolution_variance(sigma, eigs[static_cast<std::size_t>(k - 1)],
                                              p.beta * mu_k, h);
        const Complex rot = std::exp(Complex(0.0, -mu_k * h));

        if (spec.complex_increments) {
            // circular noise: the convolution is itself circular, so the
            // even split is already the exact covariance
            const double s = std::sqrt(v / 2.0);
            w[k] = rot * Complex(z1 * s, z2 * s);
        } else if (spec.exact_complex_convolution) {
            // full 2x2 covariance of (Re, Im) for a real driving motion
            const double q = sigma * sigma * eigs[static_cast<std::size_t>(k - 1)];
            const Complex a(2.0 * p.beta * mu_k, 2.0 * mu_k);
            const Complex j = (1.0 - std::exp(-a * h)) / a;
            const double v0 = v / std::max(q, 1e-300);
            const double c_rr = q * (v0 + j.real()) / 2.0;
            const double c_ii = q * (v0 - j.real()) / 2.0;
            const double c_ri = q * j.imag() / 2.0;
            const double l11 = std::sqrt(std::max(c_rr, 0.0));
            const double l21 = (l11 > 0.0) ? c_ri / l11 : 0.0;
            const double l22 = std::sqrt(std::max(c_ii - l21 * l21, 0.0));
            w[k] = Complex(l11 * z1, l21 * z1 + l22 * z2);
        } else {
            w[k] = rot * Complex(z1 * std::sqrt(v), 0.0);
        }
    }
    return w;
}

} // namespace cgl
