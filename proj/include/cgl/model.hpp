#pragma once

#include "cgl/field.hpp"
#include "cgl/grid.hpp"
#include "cgl/params.hpp"

namespace cgl {

/// Pointwise cubic kernel z -> (gamma + i) |z|^2 z; (-1+i)|z|^2 z at the
/// default coefficients.
inline Complex cubic_kernel(Complex z, const ModelParams& p) {
    return Complex(p.gamma, 1.0) * (std::norm(z) * z);
}

/// Pointwise quintic kernel z -> (mu + i nu) |z|^4 z; (-1+i)|z|^4 z at the
/// default coefficients.
inline Complex quintic_kernel(Complex z, const ModelParams& p) {
    const double m2 = std::norm(z);
    return Complex(p.mu, p.nu) * (m2 * m2 * z);
}

/// Modulus ceiling for the pseudo-spectral evaluation; exceeding it trips
/// the NonFinite blow-up guard.
inline constexpr double kBlowupGuard = 1e6;

/// Pseudo-spectral evaluation of the cubic nonlinearity: synthesize on the
/// collocation grid, apply the kernel pointwise, project back.
SpectralField nonlinearity_cubic(const SpectralField& u, const ModelParams& p,
                                 const SineBasisGrid& g);

/// Pseudo-spectral evaluation of the quintic nonlinearity.
SpectralField nonlinearity_quintic(const SpectralField& u, const ModelParams& p,
                                   const SineBasisGrid& g);

/// Combined cubic + quintic evaluation with a single transform pair. Returns
/// the zero field in linear mode.
SpectralField nonlinearity_sum(const SpectralField& u, const ModelParams& p,
                               const SineBasisGrid& g);

/// Slow coupling f(a,b) = eta a + i kappa b (mode-wise linear).
SpectralField coupling_slow(const SpectralField& a, const SpectralField& b,
                            const ModelParams& p);

/// Fast coupling g(a,b) = eta b + i kappa a.
SpectralField coupling_fast(const SpectralField& a, const SpectralField& b,
                            const ModelParams& p);

} // namespace cgl
