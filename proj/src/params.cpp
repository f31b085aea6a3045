#include "cgl/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cgl {

ModelParams validate_params(ModelParams raw) {
    const double fields[] = {raw.beta, raw.gamma, raw.mu, raw.nu,
                             raw.eta,  raw.kappa, raw.eps};
    for (double f : fields) {
        if (!std::isfinite(f)) {
            throw HypothesisViolation("model parameter is not finite");
        }
    }
    if (raw.beta <= 0.0) {
        throw HypothesisViolation("beta must be positive, got " + std::to_string(raw.beta));
    }
    if (raw.eta <= 0.0) {
        throw HypothesisViolation("eta must be positive, got " + std::to_string(raw.eta));
    }
    if (!(raw.eps > 0.0 && raw.eps <= 1.0)) {
        throw HypothesisViolation("eps must lie in (0,1], got " + std::to_string(raw.eps));
    }

    raw.lambda_poincare = std::numbers::pi * std::numbers::pi;
    raw.alpha = raw.beta * raw.lambda_poincare / 2.0 - raw.eta;
    if (raw.alpha <= 0.0) {
        throw HypothesisViolation("dissipativity gap alpha = beta*pi^2/2 - eta = " +
                                  std::to_string(raw.alpha) + " must be positive");
    }
    return raw;
}

} // namespace cgl
