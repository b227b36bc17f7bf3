#pragma once

#include <vector>

#include "enriques/lattice.hpp"

namespace enriques {

// phi(H) = min |H.F| over nonzero isotropic F, together with a primitive
// isotropic witness attaining it.
struct PhiResult {
  Integer value;
  LatticeVector witness;
};

// Exact phi(H). Candidate values c = 1, 2, ... (multiples of content(H)) are
// tested in increasing order by complete enumeration of the affine slice
// {F : H.F = c, F^2 = 0}. Requires H^2 > 0, else PreconditionError.
//
// The witness is deterministic: it lies in the forward cone, and among all
// primitive minimizers it has the smallest max-coordinate magnitude, ties
// going to the lexicographically largest coordinate tuple.
PhiResult phi(const LatticeVector& h);

// All F with F^2 = 0 and pair(H, F) = c, sorted lexicographically. Empty when
// content(H) does not divide c. Requires H^2 > 0 and c >= 1.
std::vector<LatticeVector> enumerate_isotropic_with_pairing(const LatticeVector& h,
                                                            const Integer& c);

// Order used to pick the reported witness (true if a is preferred over b).
bool witness_preferred(const LatticeVector& a, const LatticeVector& b);

}  // namespace enriques
