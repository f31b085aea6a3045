#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace cgl {

/// Philox 4x32-10 block cipher (Salmon et al., SC 2011). Stateless: the
/// output is a pure function of (counter, key), which is what makes every
/// noise draw reproducible independent of call order and worker count.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Stream identifiers for the independent noise channels and auxiliary
/// draw purposes.
enum Stream : std::uint32_t {
    kChannel1 = 1,    // slow-equation Wiener channel
    kChannel2 = 2,    // fast-equation Wiener channel
    kFieldDraw = 4,   // random field / initial data generation
    kScalarDraw = 5,  // scalar pair draws in the inequality checks
};

/// Keyed generator: one 64-bit master seed, draws addressed by
/// (replica, stream, ctx, step, mode). Distinct keys yield independent
/// standard normals.
struct RngStream {
    std::uint64_t master_seed = 0;
};

struct DrawKey {
    std::uint32_t replica = 0;
    std::uint32_t stream = 0;
    std::uint32_t ctx = 0; // nested-solve / purpose discriminator
    std::uint64_t step = 0;
    std::uint32_t mode = 0;
};

/// Two independent standard normals for the given key (Box-Muller over the
/// Philox block). Bit-reproducible.
std::pair<double, double> normal_pair(const RngStream& rng, const DrawKey& key);

} // namespace cgl
