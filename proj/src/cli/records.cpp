#include "enriques/cli/records.hpp"

#include "enriques/cli/json_io.hpp"
#include "enriques/oracle.hpp"

namespace enriques::cli {
namespace {

std::string torsion_suffix(const PicClass& c) { return c.torsion ? " + K_S" : ""; }

std::string check_json(const NumericCheck& c) {
  return ObjectWriter()
      .field("lhs", c.lhs)
      .field("relation", to_string(c.relation))
      .field("rhs", c.rhs)
      .field("holds", c.evaluate())
      .str();
}

std::string step_json(const CertificateStep& s) {
  ObjectWriter w;
  w.field("name", s.name).field("claim", s.claim).field("citation", s.citation);
  if (s.check) {
    w.raw("check", check_json(*s.check));
  } else {
    w.null("check");
  }
  w.field("passed", s.passed);
  std::string subs = "[";
  for (std::size_t i = 0; i < s.substeps.size(); ++i) {
    if (i) subs += ",";
    subs += step_json(s.substeps[i]);
  }
  w.raw("substeps", subs + "]");
  return w.str();
}

void step_human(const CertificateStep& s, int depth, std::string& out) {
  out += std::string(2 + 4 * depth, ' ');
  out += s.passed ? "[PASS] " : "[FAIL] ";
  out += s.name + ": ";
  out += s.check ? s.check->to_display_string() : "holds unconditionally";
  out += "  (" + s.citation + ")\n";
  out += std::string(9 + 4 * depth, ' ') + s.claim + "\n";
  for (const auto& sub : s.substeps) step_human(sub, depth + 1, out);
}

}  // namespace

PhiRecord compute_phi(const PicClass& h, std::optional<int> oracle_radius) {
  PhiRecord r;
  r.h = h;
  r.h_squared = self_int(h.num);
  r.result = phi(h.num);
  if (oracle_radius) {
    if (*oracle_radius < 1 || *oracle_radius > 5) {
      throw InputError("--radius must be between 1 and 5, got " + std::to_string(*oracle_radius));
    }
    r.oracle = OracleCheck{*oracle_radius, phi_bruteforce(h.num, *oracle_radius)};
  }
  return r;
}

PolarizedSurfaceReport compute_report(const PicClass& h) { return surface_report(h); }

HilbRecord compute_hilb(const Hilb2Class& c) {
  HilbRecord r;
  r.c = c;
  r.nef = is_nef_hilb(c);
  if (c.n == 2 && self_int(c.l.num) > 0) r.verdict = ample_verdict_hilb2(c);
  return r;
}

Certificate compute_certificate(const PicClass& h, long k, CertTarget target) {
  return target == CertTarget::GaussOnSurface ? certify_gauss_on_surface(h, k) : certify_gauss_prym(h, k);
}

std::string to_json(const PhiRecord& r) {
  ObjectWriter w;
  w.field("phi", r.result.value).raw("witness", json_array(r.result.witness)).field("h_squared", r.h_squared);
  if (r.oracle) {
    ObjectWriter o;
    o.field("radius", static_cast<long>(r.oracle->radius));
    if (r.oracle->value) {
      o.field("value", *r.oracle->value);
    } else {
      o.null("value");
    }
    o.field("agrees", r.oracle->value == r.result.value);
    w.raw("oracle", o.str());
  }
  return w.str();
}

std::string to_json(const PolarizedSurfaceReport& r) {
  return ObjectWriter()
      .raw("H", format_vector_input(r.h))
      .field("h_squared", r.h_squared)
      .field("genus", r.genus)
      .field("linsys_dim", r.linsys_dim)
      .field("phi", r.phi)
      .field("max_k_very_ample", r.max_k_very_ample)
      .str();
}

std::string to_json(const HilbRecord& r) {
  ObjectWriter w;
  w.raw("L", format_vector_input(r.c.l)).field("a", r.c.a).field("n", r.c.n).field("nef", r.nef);
  if (r.verdict) {
    w.field("level", to_string(r.verdict->level)).field("criterion", r.verdict->criterion);
  } else {
    w.null("level").null("criterion");
  }
  return w.str();
}

std::string to_json(const Certificate& c) {
  std::string steps = "[";
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    if (i) steps += ",";
    steps += step_json(c.steps[i]);
  }
  steps += "]";
  return ObjectWriter()
      .field("target", to_string(c.target))
      .raw("H", format_vector_input(c.h))
      .field("k", c.k)
      .field("phi_value", c.phi_value)
      .field("verdict", to_string(c.verdict))
      .field("summary", c.summary())
      .raw("steps", steps)
      .str();
}

std::string to_human(const PhiRecord& r) {
  std::string out;
  out += "H        = " + to_string(r.h.num) + torsion_suffix(r.h) + "\n";
  out += "H^2      = " + r.h_squared.get_str() + "\n";
  out += "phi(H)   = " + r.result.value.get_str() + "\n";
  out += "witness  = " + to_string(r.result.witness) + "\n";
  out += "check    : F^2 = " + self_int(r.result.witness).get_str() +
         ", H.F = " + pair(r.h.num, r.result.witness).get_str() + "\n";
  if (r.oracle) {
    out += "oracle   : box radius " + std::to_string(r.oracle->radius) + " gives ";
    out += r.oracle->value ? r.oracle->value->get_str() : std::string("no isotropic class");
    out += r.oracle->value == r.result.value ? " (agrees)\n" : " (disagrees)\n";
  }
  return out;
}

std::string to_human(const PolarizedSurfaceReport& r) {
  std::string out;
  out += "H                = " + to_string(r.h.num) + torsion_suffix(r.h) + "\n";
  out += "H^2              = " + r.h_squared.get_str() + "\n";
  out += "genus            = " + r.genus.get_str() + "\n";
  out += "dim |H|          = " + r.linsys_dim.get_str() + "\n";
  out += "phi(H)           = " + r.phi.get_str() + "\n";
  out += "max k-very ample = " + r.max_k_very_ample.get_str();
  if (r.max_k_very_ample < 0) out += " (not globally generated)";
  return out + "\n";
}

std::string to_human(const HilbRecord& r) {
  std::string out;
  out += "class    = L~ - " + r.c.a.get_str() + "B on S^[" + std::to_string(r.c.n) + "], L = " +
         to_string(r.c.l.num) + torsion_suffix(r.c.l) + "\n";
  out += std::string("nef      = ") + (r.nef ? "yes" : "no") + "\n";
  if (r.verdict) {
    out += "ample    = " + std::string(to_string(r.verdict->level)) + " (" + r.verdict->criterion + ")\n";
  } else {
    out += "ample    = not assessed (criteria are stated on S^[2] with L^2 > 0)\n";
  }
  return out;
}

std::string to_human(const Certificate& c) {
  std::string out;
  out += "certificate " + std::string(to_string(c.target)) + " for H = " + to_string(c.h.num) +
         torsion_suffix(c.h) + ", k = " + std::to_string(c.k) + "\n";
  out += "phi(H) = " + c.phi_value.get_str() + "\n";
  for (const auto& s : c.steps) step_human(s, 0, out);
  out += "verdict: " + std::string(to_string(c.verdict)) + " (" + std::string(c.summary()) + ")\n";
  return out;
}

}  // namespace enriques::cli
