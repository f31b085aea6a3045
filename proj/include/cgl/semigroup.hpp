#pragma once

#include "cgl/field.hpp"
#include "cgl/params.hpp"

namespace cgl {

/// Drift of the linear part: mode k is multiplied by -(i+beta) (k pi)^2,
/// the sine-basis symbol of (i+beta) d_xx.
SpectralField apply_laplacian_drift(const SpectralField& u, const ModelParams& p);

/// Exact application of the analytic semigroup S(t): mode k is multiplied
/// by exp(-(i+beta) (k pi)^2 t). Contractive for every t >= 0.
SpectralField semigroup_apply(const SpectralField& u, double t, const ModelParams& p);

/// Per-mode semigroup factors exp(-(i+beta) mu_k t); the cached form used by
/// the time steppers.
std::vector<Complex> semigroup_factors(int n_modes, double t, const ModelParams& p);

} // namespace cgl
