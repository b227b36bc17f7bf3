#pragma once

// Seeded generators for property tests.

#include <random>

#include "enriques/lattice.hpp"
#include "enriques/surface.hpp"

namespace enriques::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'e417u);
  return engine;
}

inline LatticeVector random_vector(int lo, int hi, std::mt19937_64& g = rng()) {
  std::uniform_int_distribution<int> d(lo, hi);
  LatticeVector v;
  for (std::size_t i = 0; i < kRank; ++i) v[i] = d(g);
  return v;
}

// Uniform in the box, conditioned on H^2 > 0.
inline LatticeVector random_positive(int bound, std::mt19937_64& g = rng()) {
  for (;;) {
    LatticeVector v = random_vector(-bound, bound, g);
    if (self_int(v) > 0) return v;
  }
}

// Uniform in the box, conditioned on H ample (H^2 > 0, forward).
inline LatticeVector random_ample(int bound, std::mt19937_64& g = rng()) {
  for (;;) {
    LatticeVector v = random_positive(bound, g);
    if (is_forward(v)) return v;
  }
}

inline LatticeVector hyperbolic(long a, long b) { return {a, b, 0, 0, 0, 0, 0, 0, 0, 0}; }

}  // namespace enriques::testing
