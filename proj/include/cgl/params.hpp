#pragma once

#include "cgl/errors.hpp"

namespace cgl {

/// Model coefficients plus the derived Poincare constant and dissipativity
/// gap. Valid instances are produced by validate_params(), which enforces
/// the standing dissipativity condition
///
///   beta > 0, eta > 0, alpha = beta * lambda / 2 - eta > 0, eps in (0,1],
///
/// with lambda = pi^2 the sharp Dirichlet Poincare constant on (0,1).
struct ModelParams {
    double beta = 1.0;   // diffusion dissipation, > 0
    double gamma = -1.0; // cubic coefficient (fixed -1)
    double mu = -1.0;    // quintic coefficient (fixed -1)
    double nu = 1.0;     // quintic rotation (fixed +1)
    double eta = 1.0;    // linear gain, > 0
    double kappa = 0.5;  // linear coupling strength
    double eps = 0.1;    // time-scale ratio, in (0,1]

    // derived; filled by validate_params
    double lambda_poincare = 0.0;
    double alpha = 0.0;

    // disables the cubic and quintic terms; used by the linear
    // Ornstein-Uhlenbeck oracles only
    bool linear_mode = false;
};

/// Recomputes the derived fields and checks the dissipativity condition.
/// Throws HypothesisViolation when the condition fails or any field is not
/// finite. Idempotent: validating an already valid record returns an equal
/// record.
ModelParams validate_params(ModelParams raw);

} // namespace cgl
