#include "cgl/integrate.hpp"

#include <cmath>
#include <string>

namespace cgl {

namespace {

SpectralField exp_euler(const SpectralField& u, const SpectralField& drift, double dt,
                        const std::vector<Complex>& decay) {
    SpectralField r = u;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        r.coeffs[i] = decay[i] * (u.coeffs[i] + dt * drift.coeffs[i]);
    }
    return r;
}

void check_finite(const SpectralField& u, const char* what) {
    if (!u.is_finite()) {
        throw NonFinite(std::string(what) + ": non-finite field state");
    }
}

} // namespace

TimeGrid TimeGrid::make(double t_end, double h, int snapshot_stride) {
    if (t_end <= 0.0 || h <= 0.0 || snapshot_stride < 1) {
        throw ConfigError("time grid needs t_end > 0, h > 0, snapshot_stride >= 1");
    }
    TimeGrid g;
    g.t_end = t_end;
    g.h = h;
    g.snapshot_stride = snapshot_stride;
    g.n_steps = static_cast<int>(std::ceil(t_end / h - 1e-9));
    return g;
}

SlowFastState step_slow_fast(const SlowFastState& s, double h, const SineBasisGrid& g,
                             const NoiseSpec& noise, const RngStream& rng,
                             const DrawKey& key_base) {
    const ModelParams& p = s.params;
    if (h > kFastStepFraction * p.eps * (1.0 + 1e-12)) {
        throw StepTooLarge("step h = " + std::to_string(h) + " exceeds " +
                           std::to_string(kFastStepFraction) + " * eps = " +
                           std::to_string(kFastStepFraction * p.eps));
    }
    DrawKey key = key_base;
    key.step = static_cast<std::uint64_t>(s.step);

    const double h_fast = h / p.eps;

    SpectralField drift_a = nonlinearity_sum(s.pair.slow, p, g);
    drift_a += coupling_slow(s.pair.slow, s.pair.fast, p);
    SpectralField drift_b = nonlinearity_sum(s.pair.fast, p, g);
    drift_b += coupling_fast(s.pair.slow, s.pair.fast, p);

    SlowFastState next = s;
    next.pair.slow = exp_euler(s.pair.slow, drift_a, h,
                               semigroup_factors(s.pair.slow.n_modes(), h, p));
    next.pair.fast = exp_euler(s.pair.fast, drift_b, h_fast,
                               semigroup_factors(s.pair.fast.n_modes(), h_fast, p));
    if (noise.sigma1 > 0.0) {
        next.pair.slow += stochastic_convolution_increment(noise, 1, h, p, rng, key);
    }
    if (noise.sigma2 > 0.0) {
        next.pair.fast += stochastic_convolution_increment(noise, 2, h_fast, p, rng, key);
    }
    next.t = s.t + h;
    next.step = s.step + 1;
    check_finite(next.pair.slow, "step_slow_fast");
    check_finite(next.pair.fast, "step_slow_fast");
    return next;
}

FrozenFastState step_frozen_fast(const FrozenFastState& s, double h, const ModelParams& p,
                                 const SineBasisGrid& g, const NoiseSpec& noise,
                                 const RngStream& rng, const DrawKey& key_base) {
    DrawKey key = key_base;
    key.step = static_cast<std::uint64_t>(s.step);

    SpectralField drift = nonlinearity_sum(s.b, p, g);
    drift += coupling_fast(s.frozen_a, s.b, p);

    FrozenFastState next = s;
    next.b = exp_euler(s.b, drift, h, semigroup_factors(s.b.n_modes(), h, p));
    if (noise.sigma2 > 0.0) {
        next.b += stochastic_convolution_increment(noise, 2, h, p, rng, key);
    }
    next.t = s.t + h;
    next.step = s.step + 1;
    check_finite(next.b, "step_frozen_fast");
    return next;
}

AveragedState step_averaged(const AveragedState& s, double h, const ModelParams& p,
                            const SineBasisGrid& g, const NoiseSpec& noise,
                            const RngStream& rng, const DrawKey& key_base,
                            const CouplingEvaluator& fbar) {
    DrawKey key = key_base;
    key.step = static_cast<std::uint64_t>(s.step);

    SpectralField drift = nonlinearity_sum(s.a_bar, p, g);
    drift += fbar(s.a_bar);

    AveragedState next = s;
    next.a_bar = exp_euler(s.a_bar, drift, h, semigroup_factors(s.a_bar.n_modes(), h, p));
    if (noise.sigma1 > 0.0) {
        next.a_bar += stochastic_convolution_increment(noise, 1, h, p, rng, key);
    }
    next.t = s.t + h;
    next.step = s.step + 1;
    check_finite(next.a_bar, "step_averaged");
    return next;
}

Trajectory simulate_path(const FieldPair& initial, const TimeGrid& grid,
                         const ModelParams& p, const SineBasisGrid& g,
                         const NoiseSpec& noise, const RngStream& rng,
                         std::uint32_t replica, std::uint32_t ctx) {
    SlowFastState state{initial, 0.0, 0, p};
    DrawKey key_base;
    key_base.replica = replica;
    key_base.ctx = ctx;

    Trajectory traj;
    traj.push_back({state.t, state.step, state.pair});
    for (int n = 0; n < grid.n_steps; ++n) {
        state = step_slow_fast(state, grid.h, g, noise, rng, key_base);
        if (grid.is_snapshot(state.step)) {
            traj.push_back({state.t, state.step, state.pair});
        }
    }
    return traj;
}

Trajectory simulate_frozen_path(const SpectralField& b0, const SpectralField& frozen_a,
                                const TimeGrid& grid, const ModelParams& p,
                                const SineBasisGrid& g, const NoiseSpec& noise,
                                const RngStream& rng, std::uint32_t replica,
                                std::uint32_t ctx) {
    FrozenFastState state{b0, frozen_a, 0.0, 0};
    DrawKey key_base;
    key_base.replica = replica;
    key_base.ctx = ctx;

    Trajectory traj;
    traj.push_back({state.t, state.step, FieldPair{frozen_a, state.b}});
    for (int n = 0; n < grid.n_steps; ++n) {
        state = step_frozen_fast(state, grid.h, p, g, noise, rng, key_base);
        if (grid.is_snapshot(state.step)) {
            traj.push_back({state.t, state.step, FieldPair{frozen_a, state.b}});
        }
    }
    return traj;
}

Trajectory simulate_averaged(const SpectralField& a0, const TimeGrid& grid,
                             const ModelParams& p, const SineBasisGrid& g,
                             const NoiseSpec& noise, const RngStream& rng,
                             std::uint32_t replica, const CouplingEvaluator& fbar) {
    AveragedState state{a0, 0.0, 0};
    DrawKey key_base;
    key_base.replica = replica;

    const SpectralField zero = SpectralField::zero(a0.n_modes());
    Trajectory traj;
    traj.push_back({state.t, state.step, FieldPair{state.a_bar, zero}});
    for (int n = 0; n < grid.n_steps; ++n) {
        state = step_averaged(state, grid.h, p, g, noise, rng, key_base, fbar);
        if (grid.is_snapshot(state.step)) {
            traj.push_back({state.t, state.step, FieldPair{state.a_bar, zero}});
        }
    }
    return traj;
}

Trajectory simulate_auxiliary(const Trajectory& base, const TimeGrid& grid, double delta,
                              const ModelParams& p, const SineBasisGrid& g,
                              const NoiseSpec& noise, const RngStream& rng,
                              std::uint32_t replica, std::uint32_t ctx) {
    if (base.empty() || base.front().step != 0) {
        throw GridMismatch("auxiliary construction needs a base trajectory starting at t=0");
    }
    const double ratio = delta / grid.h;
    const int block_steps = static_cast<int>(std::llround(ratio));
    if (block_steps < 1 || std::abs(ratio - block_steps) > 1e-9 * std::max(1.0, ratio)) {
        throw DeltaNotAligned("delta = " + std::to_string(delta) +
                              " is not an integer multiple of the step h = " +
                              std::to_string(grid.h));
    }

    // block boundaries must be retained in the base trajectory
    std::vector<const Snapshot*> at_step(static_cast<std::size_t>(grid.n_steps) + 1, nullptr);
    for (const Snapshot& s : base) {
        if (s.step >= 0 && s.step <= grid.n_steps) at_step[static_cast<std::size_t>(s.step)] = &s;
    }
    for (int b = 0; b * block_steps <= grid.n_steps; ++b) {
        if (at_step[static_cast<std::size_t>(b * block_steps)] == nullptr) {
            throw DeltaNotAligned("base trajectory has no snapshot at block boundary step " +
                                  std::to_string(b * block_steps));
        }
    }

    DrawKey key_base;
    key_base.replica = replica;
    key_base.ctx = ctx;

    SpectralField a_hat = base.front().pair.slow;
    SpectralField b_hat = base.front().pair.fast;
    SpectralField frozen_slow = base.front().pair.slow;

    const double h_fast = grid.h / p.eps;
    const std::vector<Complex> decay_slow = semigroup_factors(a_hat.n_modes(), grid.h, p);
    const std::vector<Complex> decay_fast = semigroup_factors(b_hat.n_modes(), h_fast, p);

    Trajectory traj;
    for (int n = 0; n <= grid.n_steps; ++n) {
        // re-initialize from the base run at block starts, before recording,
        // so boundary snapshots carry the reset value exactly
        if (n < grid.n_steps && n % block_steps == 0) {
            const Snapshot& boundary = *at_step[static_cast<std::size_t>(n)];
            frozen_slow = boundary.pair.slow;
            b_hat = boundary.pair.fast;
        }
        if (grid.is_snapshot(n)) {
            traj.push_back({n * grid.h, n, FieldPair{a_hat, b_hat}});
        }
        if (n == grid.n_steps) break;

        DrawKey key = key_base;
        key.step = static_cast<std::uint64_t>(n);

        SpectralField drift_a = nonlinearity_sum(frozen_slow, p, g);
        drift_a += coupling_slow(frozen_slow, b_hat, p);
        SpectralField drift_b = nonlinearity_sum(b_hat, p, g);
        drift_b += coupling_fast(frozen_slow, b_hat, p);

        a_hat = exp_euler(a_hat, drift_a, grid.h, decay_slow);
        b_hat = exp_euler(b_hat, drift_b, h_fast, decay_fast);
        if (noise.sigma1 > 0.0) {
            a_hat += stochastic_convolution_increment(noise, 1, grid.h, p, rng, key);
        }
        if (noise.sigma2 > 0.0) {
            b_hat += stochastic_convolution_increment(noise, 2, h_fast, p, rng, key);
        }
        check_finite(a_hat, "simulate_auxiliary");
        check_finite(b_hat, "simulate_auxiliary");
    }
    return traj;
}

SpectralField default_initial_field(int n_modes) {
    SpectralField u = SpectralField::zero(n_modes);
    if (n_modes >= 1) u[1] = Complex(1.0, 0.0);
    if (n_modes >= 2) u[2] = Complex(0.0, 0.5);
    return u;
}

} // namespace cgl
