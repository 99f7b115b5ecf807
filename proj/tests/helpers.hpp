#pragma once

#include "tworay/units.hpp"

#include <cstdint>

namespace testutil {

/// dB relative to a unit reference.
inline double db(double linear) { return tworay::linear_to_db(linear); }

/// Small deterministic generator for property-test tuples; independent of
/// the library RNG under test.
class Xorshift {
  public:
    explicit Xorshift(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
    }

  private:
    std::uint64_t state_;
};

}  // namespace testutil
