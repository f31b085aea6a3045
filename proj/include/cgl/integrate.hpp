#pragma once

#include <functional>
#include <vector>

#include "cgl/field.hpp"
#include "cgl/grid.hpp"
#include "cgl/model.hpp"
#include "cgl/noise.hpp"
#include "cgl/params.hpp"
#include "cgl/semigroup.hpp"

namespace cgl {

/// Uniform time grid for [0, T]: n_steps * h >= T. Snapshots are taken at
/// step 0, every snapshot_stride-th step, and the final step.
struct TimeGrid {
    double t_end = 1.0;
    double h = 1e-3;
    int snapshot_stride = 10;
    int n_steps = 1000;

    static TimeGrid make(double t_end, double h, int snapshot_stride);
    bool is_snapshot(int step) const {
        return step == 0 || step == n_steps || step % snapshot_stride == 0;
    }
};

/// Default bound on the macro step relative to the fast nonlinear drift:
/// step_slow_fast requires h <= kFastStepFraction * eps.
inline constexpr double kFastStepFraction = 0.1;

struct SlowFastState {
    FieldPair pair;
    double t = 0.0;
    int step = 0;
    ModelParams params;
};

struct FrozenFastState {
    SpectralField b;
    SpectralField frozen_a; // immutable across steps
    double t = 0.0;
    int step = 0;
};

struct AveragedState {
    SpectralField a_bar;
    double t = 0.0;
    int step = 0;
};

struct Snapshot {
    double t = 0.0;
    int step = 0;
    FieldPair pair;
};
using Trajectory = std::vector<Snapshot>;

/// Evaluates the averaged coupling for the current macro state; provided by
/// the ergodics layer (micro-solve with caching) or by closed forms in tests.
using CouplingEvaluator = std::function<SpectralField(const SpectralField&)>;

/// One exponential-Euler step of the coupled pair: the linear semigroup is
/// applied exactly per mode (at rate 1 for the slow field, 1/eps for the
/// fast one), nonlinear and coupling terms explicitly, and the noise with
/// the exact per-mode stochastic-convolution variance.
SlowFastState step_slow_fast(const SlowFastState& s, double h, const SineBasisGrid& g,
                             const NoiseSpec& noise, const RngStream& rng,
                             const DrawKey& key_base);

/// One exponential-Euler step of the fast equation with frozen slow input,
/// in the fast equation's own time (no eps scaling).
FrozenFastState step_frozen_fast(const FrozenFastState& s, double h, const ModelParams& p,
                                 const SineBasisGrid& g, const NoiseSpec& noise,
                                 const RngStream& rng, const DrawKey& key_base);

/// One exponential-Euler step of the effective equation; consumes the same
/// channel-1 keys a coupled run would at the same step index.
AveragedState step_averaged(const AveragedState& s, double h, const ModelParams& p,
                            const SineBasisGrid& g, const NoiseSpec& noise,
                            const RngStream& rng, const DrawKey& key_base,
                            const CouplingEvaluator& fbar);

/// Marches the coupled pair over the grid. Noise keys are derived from
/// (replica, channel, step, mode), so equal seeds give bit-identical paths
/// regardless of scheduling.
Trajectory simulate_path(const FieldPair& initial, const TimeGrid& grid,
                         const ModelParams& p, const SineBasisGrid& g,
                         const NoiseSpec& noise, const RngStream& rng,
                         std::uint32_t replica, std::uint32_t ctx = 0);

/// Marches the frozen-fast equation; snapshots carry the fast field in
/// pair.fast and the frozen slow input in pair.slow.
Trajectory simulate_frozen_path(const SpectralField& b0, const SpectralField& frozen_a,
                                const TimeGrid& grid, const ModelParams& p,
                                const SineBasisGrid& g, const NoiseSpec& noise,
                                const RngStream& rng, std::uint32_t replica,
                                std::uint32_t ctx = 0);

/// Marches the averaged equation; snapshots carry the averaged field in
/// pair.slow and a zero field in pair.fast.
Trajectory simulate_averaged(const SpectralField& a0, const TimeGrid& grid,
                             const ModelParams& p, const SineBasisGrid& g,
                             const NoiseSpec& noise, const RngStream& rng,
                             std::uint32_t replica, const CouplingEvaluator& fbar);

/// Builds the block-frozen auxiliary pair driven by the base run's noise
/// keys: the auxiliary fast field is re-initialized from the base fast field
/// at every block boundary k*delta and driven with the slow field frozen at
/// the block start; the auxiliary slow field sees its nonlinear terms frozen
/// at the latest boundary and the live auxiliary fast coupling.
///
/// delta must be an integer multiple of the base step h, and every block
/// boundary must be a snapshot of the base trajectory.
Trajectory simulate_auxiliary(const Trajectory& base, const TimeGrid& grid, double delta,
                              const ModelParams& p, const SineBasisGrid& g,
                              const NoiseSpec& noise, const RngStream& rng,
                              std::uint32_t replica, std::uint32_t ctx = 0);

/// Smooth O(1) default initial state: modes (1, 2) set to (1, 0.5i).
SpectralField default_initial_field(int n_modes);

} // namespace cgl
