#include "enriques/hilb.hpp"

#include "enriques/errors.hpp"
#include "enriques/phi.hpp"
#include "enriques/surface.hpp"

namespace enriques {

std::string_view to_string(PositivityLevel level) {
  switch (level) {
    case PositivityLevel::ProvedVeryAmple: return "ProvedVeryAmple";
    case PositivityLevel::ProvedAmple: return "ProvedAmple";
    case PositivityLevel::NefOnly: return "NefOnly";
    case PositivityLevel::NotNef: return "NotNef";
    case PositivityLevel::Unknown: return "Unknown";
  }
  return "Unknown";
}

bool is_nef_hilb(const Hilb2Class& c) {
  if (c.n < 2) throw PreconditionError("Hilbert scheme order n = " + std::to_string(c.n) + " < 2");
  if (c.a < 0) return false;
  if (c.a == 0) return is_nef_on_s(c.l.num);
  const Integer sq = self_int(c.l.num);
  if (sq <= 0) throw PreconditionError("L^2 = " + sq.get_str() + ": φ undefined");
  if (!is_forward(c.l.num)) return false;
  return c.n * c.a <= phi(c.l.num).value;
}

PositivityVerdict ample_verdict_hilb2(const Hilb2Class& c) {
  if (c.n != 2) {
    throw PreconditionError("ampleness criteria are proved on S^[2] only, got n = " +
                            std::to_string(c.n));
  }
  const LatticeVector& l = c.l.num;
  const Integer sq = self_int(l);
  if (sq <= 0) throw PreconditionError("L^2 = " + sq.get_str() + ": φ undefined");

  PositivityVerdict v;
  v.nef = is_nef_hilb(c);
  if (is_forward(l)) {
    const Integer m = phi(l).value;
    const Integer& a = c.a;
    if (a == 1 && m >= 5) {
      v.level = PositivityLevel::ProvedVeryAmple;
      v.criterion = criterion::kVeryAmple;
      return v;
    }
    if (m % 2 == 0 && m > 4 && a >= 1 && a <= m / 2 - 1) {
      v.level = PositivityLevel::ProvedAmple;
      v.criterion = criterion::kAmpleFamily;
      return v;
    }
    if (a >= 3 && m > 2 * a) {
      v.level = PositivityLevel::ProvedAmple;
      v.criterion = criterion::kAmpleFromPhi;
      return v;
    }
  }
  v.criterion = criterion::kNuer;
  if (!v.nef) {
    v.level = PositivityLevel::NotNef;
  } else {
    v.level = c.a == 0 ? PositivityLevel::NefOnly : PositivityLevel::Unknown;
  }
  return v;
}

Hilb2Class restrict_torsion_twist(const Hilb2Class& c) {
  return {c.l.twisted_by_canonical(), c.a, c.n};
}

}  // namespace enriques
