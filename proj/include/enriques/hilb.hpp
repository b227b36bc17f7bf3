#pragma once

// Divisor classes L~ - aB on the Hilbert scheme S^[n] of an unnodal Enriques
// surface. Pic(S^[n]) = Pic(S) + ZB, where 2B is the exceptional divisor of
// the Hilbert-Chow morphism and L~ is the class induced by L on S.

#include <string>
#include <string_view>

#include "enriques/lattice.hpp"

namespace enriques {

struct Hilb2Class {
  PicClass l;
  Integer a;
  long n = 2;
};

enum class PositivityLevel { ProvedVeryAmple, ProvedAmple, NefOnly, NotNef, Unknown };

std::string_view to_string(PositivityLevel level);

namespace criterion {
inline constexpr std::string_view kVeryAmple = "Prop h-b";
inline constexpr std::string_view kAmpleFromPhi = "Prop line-bundles-ampi";
inline constexpr std::string_view kAmpleFamily = "Remark ample family";
inline constexpr std::string_view kNuer = "Thm Nuer";
}  // namespace criterion

// Graded answer: the ampleness criteria are sufficient, not a characterization,
// so a nef class with a >= 1 that no criterion covers is Unknown.
struct PositivityVerdict {
  PositivityLevel level = PositivityLevel::Unknown;
  std::string criterion;
  bool nef = false;

  bool proved_ample() const {
    return level == PositivityLevel::ProvedAmple || level == PositivityLevel::ProvedVeryAmple;
  }
};

// Nuer: L~ - aB is nef on S^[n] iff L is nef and 0 <= a <= phi(L)/n, tested as
// n*a <= phi(L). For a > 0 with L^2 <= 0 phi(L) is undefined and
// PreconditionError is raised; n < 2 is rejected as well.
bool is_nef_hilb(const Hilb2Class& c);

// Strongest applicable statement for n = 2, checked in order:
//   a = 1, phi(L) >= 5                          -> ProvedVeryAmple (Prop h-b)
//   phi(L) = m even, m > 4, 1 <= a <= m/2 - 1   -> ProvedAmple (ample family)
//   a >= 3, phi(L) > 2a                         -> ProvedAmple (line-bundles-ampi, k = a - 2)
// The two ample criteria agree wherever both apply; the family is tagged first.
// The criteria only fire for L in the forward cone. Otherwise: a = 0 and nef
// -> NefOnly, a >= 1 and nef -> Unknown, else NotNef.
// PreconditionError unless n = 2 and L^2 > 0.
PositivityVerdict ample_verdict_hilb2(const Hilb2Class& c);

// L -> L - K_S: flips the torsion bit, numerics unchanged.
Hilb2Class restrict_torsion_twist(const Hilb2Class& c);

}  // namespace enriques
