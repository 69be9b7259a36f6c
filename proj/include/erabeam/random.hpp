#pragma once

#include <cstdint>
#include <random>

namespace erabeam {

/// Deterministic uniform generator. The mapping from raw engine output to
/// doubles is fixed here (rather than delegated to std distributions) so
/// that a seed produces the same stream on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace erabeam
