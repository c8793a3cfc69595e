#pragma once

// Deterministic randomness for generators. mt19937_64 output is fully
// specified by the standard, and the draw helpers avoid distribution
// classes whose implementations differ between standard libraries, so a
// seed reproduces the same stream everywhere.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ehk {

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t raw() { return eng(); }

  // Uniform in [0, n); the modulo bias at generator scale is far below
  // anything observable.
  int below(int n) { return int(raw() % std::uint64_t(n)); }

  // True with probability p, from the top 53 bits.
  bool chance(double p) { return double(raw() >> 11) * 0x1.0p-53 < p; }

  // Fisher-Yates over [0, n).
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = int(v.size()) - 1; i > 0; --i) std::swap(v[i], v[below(i + 1)]);
  }
};

}  // namespace ehk
