#pragma once

// Certificates that the surjectivity theorems for higher Gaussian maps apply
// to a polarized unnodal Enriques surface (S, H).
//
// GaussOnSurface: gamma^k of O_S(C) is surjective when phi(H) > 2k + 4. The
// chain is phi(H) -> phi(H - K_S) = phi(H) -> (H - K_S)~ - (k+2)B ample on
// S^[2] -> H^1(S^[2], H~ - (k+2)B) = 0 by Kawamata-Viehweg -> Ortiz.
//
// GaussPrymOnCurve: gamma^k of omega_C (x) alpha on C in |H| factors through
// gamma^k on S followed by the restriction p1 and the conormal map p2, so the
// certificate checks all three. Aggregate threshold: phi(H) > 4(k + 2), or
// phi(H) > 6 for k = 1.
//
// The theorems are sufficient conditions only: an Inconclusive certificate
// never asserts non-surjectivity.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enriques/lattice.hpp"

namespace enriques {

struct Thresholds {
  long k = 1;
  Integer gauss_strict;  // 2k + 4
  Integer prym_strict;   // 6 for k = 1, else 4(k + 2)
};

// PreconditionError for k < 1.
Thresholds thresholds(long k);

enum class Relation { Greater, GreaterEqual, Equal };

struct NumericCheck {
  Integer lhs;
  Relation relation = Relation::Equal;
  Integer rhs;

  bool evaluate() const;
  // e.g. "7 > 6"
  std::string to_string() const;
  // e.g. "7 ≯ 6" for a failing check
  std::string to_display_string() const;
};

std::string_view to_string(Relation r);

namespace citation {
inline constexpr std::string_view kPhi = "Def phi";
inline constexpr std::string_view kTwist = "Cor coroampleds";
inline constexpr std::string_view kAmple = "Prop line-bundles-ampi";
inline constexpr std::string_view kVanishing = "Eq uguaglianze/KV";
inline constexpr std::string_view kOrtiz = "Thm ortiz";
inline constexpr std::string_view kTheorem1 = "Thm 1";
inline constexpr std::string_view kCaseK1 = "Remark punocasok1";
inline constexpr std::string_view kP1Restriction = "KV on P(Omega_S) = 2B";
inline constexpr std::string_view kP2Conormal = "Kobayashi + p1 vanishing at k-1";
}  // namespace citation

struct CertificateStep {
  std::string name;  // short identifier: phi, twist, ample, vanishing, ortiz, gamma, p1, p2
  std::string claim;
  std::string citation;
  std::optional<NumericCheck> check;  // absent for steps that hold unconditionally
  bool passed = false;
  std::vector<CertificateStep> substeps;
};

enum class CertTarget { GaussOnSurface, GaussPrymOnCurve };
enum class CertVerdict { Surjective, Inconclusive };

std::string_view to_string(CertTarget t);
std::string_view to_string(CertVerdict v);

struct Certificate {
  CertTarget target = CertTarget::GaussOnSurface;
  PicClass h;
  long k = 1;
  Integer phi_value;
  CertVerdict verdict = CertVerdict::Inconclusive;
  std::vector<CertificateStep> steps;

  // Human label for the verdict.
  std::string_view summary() const;
  // First top-level step that did not pass, if any.
  const CertificateStep* first_failure() const;
};

// Both require H ample on S and k >= 1 (PreconditionError otherwise).
Certificate certify_gauss_on_surface(const PicClass& h, long k);
Certificate certify_gauss_on_surface(const LatticeVector& h, long k);
Certificate certify_gauss_prym(const PicClass& h, long k);
Certificate certify_gauss_prym(const LatticeVector& h, long k);

// Re-evaluates every recorded check (recursively) and the verdict.
bool certificate_is_consistent(const Certificate& c);

}  // namespace enriques
