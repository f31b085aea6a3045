#include "cgl/rng.hpp"

#include <cmath>
#include <numbers>

namespace cgl {

namespace {

constexpr std::uint32_t kMultA = 0xD2511F53u;
constexpr std::uint32_t kMultB = 0xCD9E8D57u;
constexpr std::uint32_t kWeylA = 0x9E3779B9u;
constexpr std::uint32_t kWeylB = 0xBB67AE85u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

inline std::array<std::uint32_t, 4> round_once(const std::array<std::uint32_t, 4>& c,
                                               const std::array<std::uint32_t, 2>& k) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mul_hi_lo(kMultA, c[0], hi0, lo0);
    mul_hi_lo(kMultB, c[2], hi1, lo1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
    for (int r = 0; r < 10; ++r) {
        counter = round_once(counter, key);
        key[0] += kWeylA;
        key[1] += kWeylB;
    }
    return counter;
}

std::pair<double, double> normal_pair(const RngStream& rng, const DrawKey& key) {
    const std::array<std::uint32_t, 4> counter = {
        key.mode,
        static_cast<std::uint32_t>(key.step),
        key.ctx ^ static_cast<std::uint32_t>(key.step >> 32),
        (key.stream << 24) | (key.replica & 0x00FFFFFFu),
    };
    const std::array<std::uint32_t, 2> seed_key = {
        static_cast<std::uint32_t>(rng.master_seed),
        static_cast<std::uint32_t>(rng.master_seed >> 32),
    };
    const std::array<std::uint32_t, 4> out = philox4x32(counter, seed_key);

    const std::uint64_t bits1 = (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
    const std::uint64_t bits2 = (static_cast<std::uint64_t>(out[2]) << 32) | out[3];
    const double u1 = 1.0 - static_cast<double>(bits1 >> 11) * 0x1.0p-53; // (0,1]
    const double u2 = static_cast<double>(bits2 >> 11) * 0x1.0p-53;      // [0,1)

    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

} // namespace cgl
