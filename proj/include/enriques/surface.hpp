#pragma once

#include "enriques/lattice.hpp"

namespace enriques {

// Numerics of a polarized unnodal Enriques surface (S, H).
//
// Positivity on S follows the unnodal rule: without (-2)-curves the nef cone
// of Num(S) is the closed forward positive cone, so
//   nef   <=>  L = 0, or L^2 >= 0 and L forward,
//   ample <=>  L^2 > 0 and L forward.

struct PolarizedSurfaceReport {
  PicClass h;
  Integer h_squared;
  Integer genus;
  Integer linsys_dim;
  Integer phi;
  // phi - 2, floored at -1 (-1: not even globally generated).
  Integer max_k_very_ample;
};

// H^2 / 2 + 1. PreconditionError unless H^2 > 0.
Integer sectional_genus(const LatticeVector& h);
// dim |H| = g - 1, stated for ample H. PreconditionError otherwise.
Integer linear_system_dim(const LatticeVector& h);

bool is_ample_on_s(const LatticeVector& l);
bool is_nef_on_s(const LatticeVector& l);

// On an unnodal surface, H is k-very ample iff phi(H) >= k + 2. A class in
// the backward cone has no sections and is never k-very ample.
// PreconditionError for H^2 <= 0 or k < 0.
bool is_k_very_ample(const LatticeVector& h, long k);

// Full report; PreconditionError naming the failing fact unless H is ample.
PolarizedSurfaceReport surface_report(const PicClass& h);

// Throws PreconditionError with "not ample: ..." unless H is ample on S.
void require_ample_on_s(const LatticeVector& h);

}  // namespace enriques
