#include "enriques/surface.hpp"

#include "enriques/errors.hpp"
#include "enriques/phi.hpp"

namespace enriques {

void require_ample_on_s(const LatticeVector& h) {
  const Integer sq = self_int(h);
  if (sq <= 0) throw PreconditionError("not ample: H^2 = " + sq.get_str() + " is not positive");
  if (!is_forward(h)) throw PreconditionError("not ample: wrong cone component");
}

Integer sectional_genus(const LatticeVector& h) {
  const Integer sq = self_int(h);
  if (sq <= 0) throw PreconditionError("sectional genus: H^2 = " + sq.get_str() + " is not positive");
  return sq / 2 + 1;
}

Integer linear_system_dim(const LatticeVector& h) {
  require_ample_on_s(h);
  return sectional_genus(h) - 1;
}

bool is_ample_on_s(const LatticeVector& l) { return self_int(l) > 0 && is_forward(l); }

bool is_nef_on_s(const LatticeVector& l) {
  if (l.is_zero()) return true;
  return self_int(l) >= 0 && is_forward(l);
}

bool is_k_very_ample(const LatticeVector& h, long k) {
  if (k < 0) throw PreconditionError("k-very ampleness needs k >= 0, got k = " + std::to_string(k));
  PhiResult r = phi(h);
  if (!is_forward(h)) return false;
  return r.value >= k + 2;
}

PolarizedSurfaceReport surface_report(const PicClass& h) {
  require_ample_on_s(h.num);
  PolarizedSurfaceReport rep;
  rep.h = h;
  rep.h_squared = self_int(h.num);
  rep.genus = rep.h_squared / 2 + 1;
  rep.linsys_dim = rep.genus - 1;
  rep.phi = phi(h.num).value;
  rep.max_k_very_ample = rep.phi - 2;
  if (rep.max_k_very_ample < -1) rep.max_k_very_ample = -1;
  return rep;
}

}  // namespace enriques
