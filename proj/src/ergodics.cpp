#include "cgl/ergodics.hpp"

#include <chrono>
#include <cmath>
#include <string>

namespace cgl {

namespace {

void validate_ergodic_config(const ErgodicConfig& cfg) {
    if (cfg.burn_in_multiplier < 1.0 || cfg.t_average_multiplier < 1.0) {
        throw ConfigError("ergodic burn-in and averaging windows must be >= 1/(2 alpha)");
    }
    if (cfg.replicas < 2 || cfg.replicas > 64) {
        throw ConfigError("ergodic replicas must lie in [2, 64]");
    }
    if (cfg.h_micro <= 0.0 || cfg.cache_threshold <= 0.0) {
        throw ConfigError("ergodic h_micro and cache_threshold must be positive");
    }
}

} // namespace

SpectralField random_band_limited_field(int n_modes, double amplitude,
                                        const RngStream& rng, std::uint32_t replica,
                                        std::uint32_t ctx, std::uint64_t draw_index) {
    SpectralField u = SpectralField::zero(n_modes);
    DrawKey key;
    key.replica = replica;
    key.stream = kFieldDraw;
    key.ctx = ctx;
    key.step = draw_index;
    const int k_max = std::max(1, n_modes / 2);
    for (int k = 1; k <= k_max; ++k) {
        key.mode = static_cast<std::uint32_t>(k);
        const auto [z1, z2] = normal_pair(rng, key);
        const double scale = amplitude / (std::numbers::sqrt2 * k);
        u[k] = Complex(z1 * scale, z2 * scale);
    }
    return u;
}

InvariantStats estimate_invariant_mean(const SpectralField& frozen_a,
                                       const ErgodicConfig& cfg, const ModelParams& p,
                                       const SineBasisGrid& g, const NoiseSpec& noise,
                                       const RngStream& rng, std::uint32_t replica,
                                       std::uint32_t ctx) {
    validate_ergodic_config(cfg);
    const auto t0 = std::chrono::steady_clock::now();

    const double rate = 2.0 * p.alpha;
    const double t_burn = cfg.burn_in_multiplier / rate;
    const double t_avg = cfg.t_average_multiplier / rate;
    const int n_burn = static_cast<int>(std::ceil(t_burn / cfg.h_micro));
    const int n_avg = std::max(2, static_cast<int>(std::ceil(t_avg / cfg.h_micro)));

    const int n = frozen_a.n_modes();
    const int r_count = cfg.replicas;

    std::vector<SpectralField> replica_mean(static_cast<std::size_t>(r_count));
    std::vector<SpectralField> half_diff(static_cast<std::size_t>(r_count));
    std::vector<double> replica_m2(static_cast<std::size_t>(r_count), 0.0);

    for (int r = 0; r < r_count; ++r) {
        // distinct deterministic initial data: zero, then keyed random fields
        SpectralField x0 = (r == 0)
            ? SpectralField::zero(n)
            : random_band_limited_field(n, 1.0, rng, replica, ctx * 64u + static_cast<std::uint32_t>(r), 0);

        FrozenFastState state{x0, frozen_a, 0.0, 0};
        DrawKey key_base;
        key_base.replica = replica;
        key_base.ctx = ctx * 64u + static_cast<std::uint32_t>(r);

        for (int i = 0; i < n_burn; ++i) {
            state = step_frozen_fast(state, cfg.h_micro, p, g, noise, rng, key_base);
        }
        SpectralField sum_first = SpectralField::zero(n);
        SpectralField sum_second = SpectralField::zero(n);
        double sum_m2 = 0.0;
        const int n_half = n_avg / 2;
        for (int i = 0; i < n_avg; ++i) {
            state = step_frozen_fast(state, cfg.h_micro, p, g, noise, rng, key_base);
            if (i < n_half) {
                sum_first += state.b;
            } else {
                sum_second += state.b;
            }
            const double l2 = norm_l2(state.b);
            sum_m2 += l2 * l2;
        }
        const SpectralField total = sum_first + sum_second;
        replica_mean[static_cast<std::size_t>(r)] = (1.0 / n_avg) * total;
        half_diff[static_cast<std::size_t>(r)] =
            (1.0 / n_half) * sum_first - (1.0 / (n_avg - n_half)) * sum_second;
        replica_m2[static_cast<std::size_t>(r)] = sum_m2 / n_avg;
    }

    SpectralField pooled = SpectralField::zero(n);
    for (const SpectralField& m : replica_mean) pooled += m;
    pooled = (1.0 / r_count) * pooled;

    double m2 = 0.0;
    for (double v : replica_m2) m2 += v;
    m2 /= r_count;

    double sum_d2 = 0.0;
    double max_d = 0.0;
    for (const SpectralField& m : replica_mean) {
        const double d = norm_l2(m - pooled);
        sum_d2 += d * d;
        max_d = std::max(max_d, d);
    }
    const double sd = std::sqrt(sum_d2 / std::max(1, r_count - 1));
    const double ci = 2.0 * sd / std::sqrt(static_cast<double>(r_count));

    // within-replica fluctuation scale from half-window means
    double sum_h2 = 0.0;
    for (const SpectralField& d : half_diff) {
        const double v = norm_l2(d) / 2.0;
        sum_h2 += v * v;
    }
    const double s_within = std::sqrt(sum_h2 / r_count);
    const double floor = 1e-13 * (1.0 + norm_l2(pooled) + norm_l2(frozen_a));
    if (max_d > 5.0 * std::max(s_within, floor)) {
        throw ErgodicSolveFailed(
            "replica invariant-mean estimates disagree beyond 5x the within-replica "
            "fluctuation scale (max deviation " + std::to_string(max_d) +
            ", scale " + std::to_string(s_within) + "); increase burn-in or check parameters");
    }

    InvariantStats stats;
    stats.mean_field = std::move(pooled);
    stats.second_moment = m2;
    stats.ci_halfwidth = ci;
    stats.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return stats;
}

FbarResult evaluate_fbar(const SpectralField& a, const ErgodicConfig& cfg,
                         const ModelParams& p, const SineBasisGrid& g,
                         const NoiseSpec& noise, const RngStream& rng,
                         std::uint32_t replica, std::uint32_t ctx) {
    if (p.kappa == 0.0) {
        FbarResult r;
        r.fbar = p.eta * a;
        r.stats.mean_field = SpectralField::zero(a.n_modes());
        return r;
    }
    FbarResult r;
    r.stats = estimate_invariant_mean(a, cfg, p, g, noise, rng, replica, ctx);
    r.fbar = coupling_slow(a, r.stats.mean_field, p);
    return r;
}

FbarEvaluator::FbarEvaluator(ErgodicConfig cfg, ModelParams p, const SineBasisGrid& g,
                             NoiseSpec noise, RngStream rng, std::uint32_t replica)
    : cfg_(cfg), params_(p), grid_(&g), noise_(std::move(noise)), rng_(rng),
      replica_(replica) {}

SpectralField FbarEvaluator::operator()(const SpectralField& a) {
    if (params_.kappa == 0.0) {
        return params_.eta * a;
    }
    std::shared_ptr<const Entry> entry;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        entry = cache_;
        if (entry != nullptr) {
            const double denom = std::max(norm_l2(entry->input), 1e-12);
            if (norm_l2(a - entry->input) / denom > cfg_.cache_threshold) {
                entry = nullptr;
            }
        }
        if (entry == nullptr) {
            ++solve_count_;
            InvariantStats stats =
                estimate_invariant_mean(a, cfg_, params_, *grid_, noise_, rng_, replica_,
                                        static_cast<std::uint32_t>(solve_count_));
            auto fresh = std::make_shared<Entry>();
            fresh->input = a;
            fresh->mean_field = std::move(stats.mean_field);
            cache_ = fresh;
            entry = fresh;
        }
    }
    return coupling_slow(a, entry->mean_field, params_);
}

DecayReport contraction_diagnostic(const SpectralField& frozen_a, const SpectralField& x0,
                                   const SpectralField& y0, const TimeGrid& grid,
                                   const ModelParams& p, const SineBasisGrid& g,
                                   const NoiseSpec& noise, const RngStream& rng,
                                   std::uint32_t replica, std::uint32_t ctx) {
    FrozenFastState sx{x0, frozen_a, 0.0, 0};
    FrozenFastState sy{y0, frozen_a, 0.0, 0};
    DrawKey key_base;
    key_base.replica = replica;
    key_base.ctx = ctx;

    const double d0 = norm_l2(x0 - y0);
    const double d0_sq = d0 * d0;

    DecayReport report;
    for (int n = 1; n <= grid.n_steps; ++n) {
        sx = step_frozen_fast(sx, grid.h, p, g, noise, rng, key_base);
        sy = step_frozen_fast(sy, grid.h, p, g, noise, rng, key_base);
        if (!grid.is_snapshot(n)) continue;
        const double d = norm_l2(sx.b - sy.b);
        const double envelope = d0_sq * std::exp(-2.0 * p.alpha * sx.t);
        const double ratio = (d0_sq > 0.0) ? (d * d) / envelope : 0.0;
        report.times.push_back(sx.t);
        report.ratios.push_back(ratio);
        report.max_ratio = std::max(report.max_ratio, ratio);
    }
    return report;
}

MixingCurve mixing_diagnostic(const SpectralField& frozen_a, const SpectralField& x0,
                              const SpectralField& fbar, const TimeGrid& grid,
                              int n_replicas, const ModelParams& p, const SineBasisGrid& g,
                              const NoiseSpec& noise, const RngStream& rng,
                              std::uint32_t replica, std::uint32_t ctx) {
    if (n_replicas < 1) {
        throw ConfigError("mixing diagnostic needs at least one replica");
    }
    std::vector<SpectralField> mean_f; // per snapshot, accumulated over replicas
    std::vector<double> times;

    for (int r = 0; r < n_replicas; ++r) {
        FrozenFastState state{x0, frozen_a, 0.0, 0};
        DrawKey key_base;
        key_base.replica = replica;
        key_base.ctx = ctx * 1024u + static_cast<std::uint32_t>(r);

        std::size_t snap = 0;
        auto record = [&](const FrozenFastState& s) {
            const SpectralField f = coupling_slow(frozen_a, s.b, p);
            if (r == 0) {
                times.push_back(s.t);
                mean_f.push_back(f);
            } else {
                mean_f[snap] += f;
            }
            ++snap;
        };
        record(state);
        for (int n = 1; n <= grid.n_steps; ++n) {
            state = step_frozen_fast(state, grid.h, p, g, noise, rng, key_base);
            if (grid.is_snapshot(n)) record(state);
        }
    }

    MixingCurve curve;
    curve.times = std::move(times);
    curve.distance.reserve(mean_f.size());
    for (const SpectralField& f : mean_f) {
        curve.distance.push_back(norm_l2((1.0 / n_replicas) * f - fbar));
    }
    return curve;
}

} // namespace cgl
