#pragma once

#include <cmath>
#include <cstdint>

namespace fkwalk {

/// Counter-based random stream keyed by (seed, walker_id, counter).
///
/// Every output is a pure function of the key and the draw counter, so two
/// streams with the same (seed, walker_id) produce bit-identical sequences on
/// any thread schedule. The generator is the SplitMix64 sequence started at a
/// key mixed from seed and walker id; each 64-bit draw advances the counter by
/// one. Gaussians use the Box-Muller transform (two uniforms per normal, the
/// sine branch discarded), fixed so results are reproducible per build.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t walker_id)
        : key_(derive_key(seed, walker_id)) {}

    std::uint64_t next_bits() {
        std::uint64_t z = key_ + (counter_++) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw strictly inside (0, 1).
    double uniform01() {
        return (static_cast<double>(next_bits() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal draw (Box-Muller cosine branch).
    double normal() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    /// Both Box-Muller branches from one pair of uniforms.
    void normal_pair(double& z0, double& z1) {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        z0 = r * std::cos(2.0 * kPi * u2);
        z1 = r * std::sin(2.0 * kPi * u2);
    }

    /// Exp(1) draw.
    double exponential() { return -std::log(uniform01()); }

    std::uint64_t counter() const { return counter_; }

private:
    static constexpr double kPi = 3.141592653589793238462643383279502884;

    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t walker_id) {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z ^= z >> 31;
        z ^= walker_id * 0xD1342543DE82EF95ULL;
        z = (z ^ (z >> 32)) * 0xFF51AFD7ED558CCDULL;
        z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ULL;
        return z ^ (z >> 33);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace fkwalk
