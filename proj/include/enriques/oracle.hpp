#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "enriques/lattice.hpp"

namespace enriques {

// Exhaustive scan of every F with all ten coordinates in [-radius, radius].
// Used as an oracle for phi: it shares no code with the slice enumeration.
//
// Writing F = p f1 + q f2 + v with v in E8(-1), F^2 = 2pq - Q(v) where Q is
// the (positive) E8 Cartan form, so F is isotropic iff pq = Q(v)/2. The
// constructor scans the (2r+1)^8 box of v once and keeps those with
// Q(v)/2 <= r^2; each query then walks that table and the factorizations
// p*q = Q(v)/2 inside the box.
class IsotropicBoxOracle {
 public:
  explicit IsotropicBoxOracle(int radius);

  int radius() const { return radius_; }
  // Number of E8 vectors kept from the box.
  std::size_t table_size() const { return table_.size(); }

  // min |H.F| over nonzero isotropic F in the box, or nullopt if none.
  // Requires H^2 > 0; coordinates of H must fit in 40 bits.
  std::optional<Integer> min_abs_pairing(const LatticeVector& h) const;

 private:
  struct Entry {
    std::array<std::int8_t, 8> v;
    std::int32_t half_norm;
  };

  int radius_;
  std::vector<Entry> table_;
};

// One-shot form of the oracle. Upper bound for phi(H); exact whenever the
// box contains a minimizer.
std::optional<Integer> phi_bruteforce(const LatticeVector& h, int radius);

}  // namespace enriques
