#pragma once

#include <cstdint>

namespace tworay::rng {

/// splitmix64 finalizer; a bijective 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr double to_unit_double(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

/// Counter-based uniform draw: sample i of a seeded stream, independent of
/// evaluation order, so parallel chunking cannot change the result.
constexpr double uniform_at(std::uint64_t seed, std::uint64_t index) {
    return to_unit_double(mix64(seed ^ mix64(index)));
}

/// Sequential splitmix64 stream. Substreams for parallel work are derived by
/// mixing the seed with the substream index.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(mix64(seed ^ mix64(index ^ 0xa5a5a5a5a5a5a5a5ULL)));
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double next_double() { return to_unit_double(next()); }

    /// Standard normal pair via Box-Muller; pinned here instead of
    /// std::normal_distribution so streams are identical across toolchains.
    void next_normal_pair(double& n1, double& n2);

  private:
    std::uint64_t state_;
};

}  // namespace tworay::rng
