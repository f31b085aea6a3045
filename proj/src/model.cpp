#include "cgl/model.hpp"

#include <cmath>

namespace cgl {

namespace {

template <typename Kernel>
SpectralField pointwise_op(const SpectralField& u, const SineBasisGrid& g, Kernel kernel) {
    PhysicalField values = g.to_physical(u);
    for (Complex& z : values) {
        if (std::abs(z.real()) > kBlowupGuard || std::abs(z.imag()) > kBlowupGuard ||
            !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw NonFinite("field modulus exceeded blow-up guard during nonlinearity evaluation");
        }
        z = kernel(z);
    }
    return g.to_modes(values);
}

} // namespace

SpectralField nonlinearity_cubic(const SpectralField& u, const ModelParams& p,
                                 const SineBasisGrid& g) {
    return pointwise_op(u, g, [&p](Complex z) { return cubic_kernel(z, p); });
}

SpectralField nonlinearity_quintic(const SpectralField& u, const ModelParams& p,
                                   const SineBasisGrid& g) {
    return pointwise_op(u, g, [&p](Complex z) { return quintic_kernel(z, p); });
}

SpectralField nonlinearity_sum(const SpectralField& u, const ModelParams& p,
                               const SineBasisGrid& g) {
    if (p.linear_mode) return SpectralField::zero(u.n_modes());
    return pointwise_op(u, g, [&p](Complex z) { return cubic_kernel(z, p) + quintic_kernel(z, p); });
}

SpectralField coupling_slow(const SpectralField& a, const SpectralField& b,
                            const ModelParams& p) {
    if (a.n_modes() != b.n_modes()) {
        throw DimensionMismatch("coupling_slow: mode counts differ");
    }
    SpectralField r = a;
    const Complex ik(0.0, p.kappa);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        r.coeffs[i] = p.eta * a.coeffs[i] + ik * b.coeffs[i];
    }
    return r;
}

SpectralField coupling_fast(const SpectralField& a, const SpectralField& b,
                            const ModelParams& p) {
    return coupling_slow(b, a, p); // roles swapped
}

} // namespace cgl
