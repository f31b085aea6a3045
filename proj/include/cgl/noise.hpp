#pragma once

#include <vector>

#include "cgl/field.hpp"
#include "cgl/params.hpp"
#include "cgl/rng.hpp"

namespace cgl {

/// Trace-class covariance spectra for the two independent Q-Wiener channels:
/// mode k of channel i carries weight lambda_{i,k} (default k^{-2}), so
/// Tr Q_i = sum_k lambda_{i,k} stays bounded under mode refinement.
///
/// The Wiener expansion W_i = sum_k lambda_{i,k}^{1/2} beta_{i,k}(t) e_k is
/// built from real Brownian motions; complex_increments switches to
/// circularly-symmetric complex noise with the same per-mode variance.
struct NoiseSpec {
    double sigma1 = 0.1;
    double sigma2 = 0.5;
    std::vector<double> q_eigs1;
    std::vector<double> q_eigs2;
    bool complex_increments = false;
    bool exact_complex_convolution = false;

    static NoiseSpec make_default(int n_modes, double s1, double s2, double q_decay = 2.0);

    double trace_q(int channel) const;
    const std::vector<double>& q_eigs(int channel) const;
    double sigma(int channel) const { return channel == 1 ? sigma1 : sigma2; }
};

/// Plain Wiener increment over dt: mode k receives lambda_{i,k}^{1/2} xi_k
/// with xi_k ~ N(0, dt) (real) or CN(0, dt) (complex flag).
SpectralField wiener_increment(const NoiseSpec& spec, int channel, double dt,
                               const RngStream& rng, const DrawKey& base);

/// Exact per-mode variance of the linear stochastic convolution
/// int_0^h S(h-s) sigma dW over one step:
///   sigma^2 lambda_k (1 - e^{-2 beta mu_k h}) / (2 beta mu_k).
double convolution_variance(double sigma, double q_eig, double beta_mu, double h);

/// One sample of the stochastic convolution increment. Modulus statistics
/// are exact per mode; the in-step phase of the semigroup is applied as a
/// single end-of-step rotation e^{-i mu_k h} unless exact_complex_convolution
/// requests the full 2x2 covariance factorization.
SpectralField stochastic_convolution_increment(const NoiseSpec& spec, int channel,
                                               double h, const ModelParams& p,
                                               const RngStream& rng, const DrawKey& base);

} // namespace cgl
