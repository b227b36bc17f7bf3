#include "enriques/certify.hpp"

#include <algorithm>
#include <stdexcept>

#include "enriques/errors.hpp"
#include "enriques/hilb.hpp"
#include "enriques/phi.hpp"
#include "enriques/surface.hpp"

namespace enriques {
namespace {

void require_k(long k) {
  if (k < 1) throw PreconditionError("k = " + std::to_string(k) + " < 1");
}

CertificateStep make_step(std::string name, std::string claim, std::string_view citation,
                          std::optional<NumericCheck> check) {
  CertificateStep s;
  s.name = std::move(name);
  s.claim = std::move(claim);
  s.citation = std::string(citation);
  s.passed = check ? check->evaluate() : true;
  s.check = std::move(check);
  return s;
}

std::string k_str(long k) { return std::to_string(k); }

// Steps of the chain for gamma^k on S, in proof order.
std::vector<CertificateStep> surface_chain(const PicClass& h, long k, const PhiResult& ph) {
  const Thresholds t = thresholds(k);
  const std::string kp2 = std::to_string(k + 2);
  std::vector<CertificateStep> steps;

  steps.push_back(make_step(
      "phi", "phi(H) = " + ph.value.get_str() + ", attained by the isotropic class F = " + to_string(ph.witness),
      citation::kPhi, NumericCheck{abs(pair(h.num, ph.witness)), Relation::Equal, ph.value}));

  const PicClass twisted = h.twisted_by_canonical();
  const Integer phi_twisted = phi(twisted.num).value;
  steps.push_back(make_step("twist", "phi(H - K_S) = phi(H) since K_S is numerically trivial",
                            citation::kTwist,
                            NumericCheck{phi_twisted, Relation::Equal, ph.value}));

  const PositivityVerdict verdict = ample_verdict_hilb2({twisted, Integer(k + 2), 2});
  NumericCheck ample_check{phi_twisted, Relation::Greater, t.gauss_strict};
  if (ample_check.evaluate() != verdict.proved_ample()) {
    throw std::logic_error("certificate: ampleness verdict disagrees with phi(H - K_S) > 2k+4");
  }
  steps.push_back(make_step("ample",
                            "(H - K_S)~ - " + kp2 + "B is ample on S^[2]: phi(H - K_S) > 2k+4",
                            citation::kAmple, ample_check));

  steps.push_back(make_step(
      "vanishing",
      "H~ - (k+2)B = K_{S^[2]} + (H - K_S)~ - (k+2)B with the last part ample, hence big and nef; "
      "H^1(S^[2], H~ - (k+2)B) = 0 by Kawamata-Viehweg",
      citation::kVanishing, NumericCheck{phi_twisted, Relation::Greater, t.gauss_strict}));

  steps.push_back(make_step("ortiz",
                            "H^1(S^[2], H~ - (k+2)B) = 0 implies gamma^" + k_str(k) +
                                " of O_S(C) is surjective",
                            citation::kOrtiz,
                            NumericCheck{ph.value, Relation::Greater, t.gauss_strict}));
  return steps;
}

CertVerdict verdict_of(const std::vector<CertificateStep>& steps) {
  bool all = std::all_of(steps.begin(), steps.end(), [](const CertificateStep& s) { return s.passed; });
  return all ? CertVerdict::Surjective : CertVerdict::Inconclusive;
}

bool step_consistent(const CertificateStep& s) {
  const bool expected = s.check ? s.check->evaluate() : true;
  if (expected != s.passed) return false;
  return std::all_of(s.substeps.begin(), s.substeps.end(), step_consistent);
}

}  // namespace

Thresholds thresholds(long k) {
  require_k(k);
  Thresholds t;
  t.k = k;
  t.gauss_strict = 2 * k + 4;
  t.prym_strict = k == 1 ? Integer(6) : Integer(4 * (k + 2));
  return t;
}

bool NumericCheck::evaluate() const {
  switch (relation) {
    case Relation::Greater: return lhs > rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
    case Relation::Equal: return lhs == rhs;
  }
  return false;
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Greater: return ">";
    case Relation::GreaterEqual: return ">=";
    case Relation::Equal: return "=";
  }
  return "?";
}

std::string NumericCheck::to_string() const {
  return lhs.get_str() + " " + std::string(enriques::to_string(relation)) + " " + rhs.get_str();
}

std::string NumericCheck::to_display_string() const {
  if (evaluate()) return to_string();
  std::string_view negated;
  switch (relation) {
    case Relation::Greater: negated = "≯"; break;
    case Relation::GreaterEqual: negated = "≱"; break;
    case Relation::Equal: negated = "≠"; break;
  }
  return lhs.get_str() + " " + std::string(negated) + " " + rhs.get_str();
}

std::string_view to_string(CertTarget t) {
  return t == CertTarget::GaussOnSurface ? "GaussOnSurface" : "GaussPrymOnCurve";
}

std::string_view to_string(CertVerdict v) {
  return v == CertVerdict::Surjective ? "Surjective" : "Inconclusive";
}

std::string_view Certificate::summary() const {
  if (verdict == CertVerdict::Surjective) return "all hypotheses verified: the map is surjective";
  return "theorem hypotheses not met: surjectivity undetermined";
}

const CertificateStep* Certificate::first_failure() const {
  for (const auto& s : steps)
    if (!s.passed) return &s;
  return nullptr;
}

Certificate certify_gauss_on_surface(const PicClass& h, long k) {
  require_k(k);
  require_ample_on_s(h.num);
  const PhiResult ph = phi(h.num);

  Certificate c;
  c.target = CertTarget::GaussOnSurface;
  c.h = h;
  c.k = k;
  c.phi_value = ph.value;
  c.steps = surface_chain(h, k, ph);
  c.verdict = verdict_of(c.steps);
  return c;
}

Certificate certify_gauss_on_surface(const LatticeVector& h, long k) {
  return certify_gauss_on_surface(PicClass{h, false}, k);
}

Certificate certify_gauss_prym(const PicClass& h, long k) {
  require_k(k);
  require_ample_on_s(h.num);
  const PhiResult ph = phi(h.num);
  const Thresholds t = thresholds(k);

  Certificate c;
  c.target = CertTarget::GaussPrymOnCurve;
  c.h = h;
  c.k = k;
  c.phi_value = ph.value;

  CertificateStep gamma = make_step(
      "gamma", "gamma^" + k_str(k) + " of O_S(C) is surjective: phi(H) > 2k+4", citation::kTheorem1,
      NumericCheck{ph.value, Relation::Greater, t.gauss_strict});
  gamma.substeps = surface_chain(h, k, ph);
  c.steps.push_back(std::move(gamma));

  if (k == 1) {
    c.steps.push_back(make_step(
        "p1", "p1 is surjective: H^1(S, Omega_S(C)) = 0 from H^1(Y, T_Y(-pi^*H)) = 0 on the K3 cover, "
              "which needs phi(H) >= 5",
        citation::kCaseK1, NumericCheck{ph.value, Relation::GreaterEqual, Integer(5)}));
    c.steps.push_back(make_step(
        "p2", "p2 is surjective: H^1(omega_C (x) alpha) = H^0(alpha) = 0 for the non-trivial 2-torsion alpha",
        citation::kCaseK1, std::nullopt));
  } else {
    c.steps.push_back(make_step(
        "p1", "p1 is surjective: H^1(Sym^" + k_str(k) +
                  " Omega_S(C)) = 0 by Kawamata-Viehweg on P(Omega_S) = 2B, which needs phi(H) > 4(k+2)",
        citation::kP1Restriction, NumericCheck{ph.value, Relation::Greater, Integer(4 * (k + 2))}));
    c.steps.push_back(make_step(
        "p2", "p2 is surjective: H^1(Sym^" + k_str(k - 1) +
                  " Omega_S|C(C)) injects into H^1(Sym^" + k_str(k - 1) +
                  " Omega_S(C)), which vanishes once phi(H) > 4(k+1)",
        citation::kP2Conormal, NumericCheck{ph.value, Relation::Greater, Integer(4 * (k + 1))}));
  }
  c.verdict = verdict_of(c.steps);
  return c;
}

Certificate certify_gauss_prym(const LatticeVector& h, long k) {
  return certify_gauss_prym(PicClass{h, false}, k);
}

bool certificate_is_consistent(const Certificate& c) {
  if (!std::all_of(c.steps.begin(), c.steps.end(), step_consistent)) return false;
  return verdict_of(c.steps) == c.verdict;
}

}  // namespace enriques
