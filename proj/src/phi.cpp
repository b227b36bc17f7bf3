#include "enriques/phi.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "enriques/enumeration.hpp"
#include "enriques/errors.hpp"

namespace enriques {
namespace {

namespace en = enumeration;

constexpr std::size_t kComplementRank = kRank - 1;

void require_positive_square(const LatticeVector& h) {
  Integer sq = self_int(h);
  if (sq <= 0) throw PreconditionError("H^2 = " + sq.get_str() + ": φ undefined");
}

Integer max_abs(const LatticeVector& v) {
  Integer m = 0;
  for (const auto& c : v.coords()) {
    Integer a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

// Data for the affine slices {F : H.F = c}: a solution x0 of H.x0 = content(H),
// an LLL-reduced basis of the negative definite complement H^perp, and the
// LDL factors of the (positive) Gram matrix -(b_i.b_j).
class IsotropicSlicer {
 public:
  explicit IsotropicSlicer(const LatticeVector& h) : content_(content(h)) {
    // Column operations on the identity that bring the functional G h to
    // (content, 0, ..., 0); the remaining columns then span its kernel.
    LatticeVector functional = dual_coords(h);
    std::array<LatticeVector, kRank> cols;
    for (std::size_t i = 0; i < kRank; ++i) cols[i] = LatticeVector::unit(i);

    for (std::size_t j = 1; j < kRank; ++j) {
      const Integer a0 = functional[0];
      const Integer aj = functional[j];
      if (aj == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a0.get_mpz_t(), aj.get_mpz_t());
      LatticeVector new0 = s * cols[0] + t * cols[j];
      LatticeVector newj = Integer(aj / g) * cols[0] - Integer(a0 / g) * cols[j];
      cols[0] = std::move(new0);
      cols[j] = std::move(newj);
      functional[0] = g;
      functional[j] = 0;
    }
    if (functional[0] < 0) cols[0] = -cols[0];
    base_solution_ = cols[0];

    en::IntMatrix gram(kComplementRank, std::vector<Integer>(kComplementRank));
    for (std::size_t i = 0; i < kComplementRank; ++i)
      for (std::size_t j = 0; j < kComplementRank; ++j)
        gram[i][j] = -pair(cols[i + 1], cols[j + 1]);

    en::IntMatrix transform;
    en::lll_reduce(gram, transform);
    for (std::size_t i = 0; i < kComplementRank; ++i) {
      LatticeVector b;
      for (std::size_t j = 0; j < kComplementRank; ++j) {
        if (transform[i][j] != 0) b += transform[i][j] * cols[j + 1];
      }
      basis_[i] = std::move(b);
    }
    factors_ = en::ldl_decompose(gram);
  }

  const Integer& content_of_h() const { return content_; }

  std::vector<LatticeVector> solutions(const Integer& c) const {
    std::vector<LatticeVector> found;
    if (c % content_ != 0) return found;

    // F = F0 + sum y_i b_i;  F^2 = F0^2 + 2 t.y - y^T M y = 0
    //   <=>  (y - z)^T M (y - z) = F0^2 + t.z  with M z = t.
    const LatticeVector f0 = Integer(c / content_) * base_solution_;
    std::vector<Rational> t(kComplementRank);
    for (std::size_t i = 0; i < kComplementRank; ++i) t[i] = pair(f0, basis_[i]);
    const std::vector<Rational> center = en::solve(factors_, t);
    Rational bound = self_int(f0);
    for (std::size_t i = 0; i < kComplementRank; ++i) bound += t[i] * center[i];

    en::enumerate_ellipsoid(factors_, center, bound, [&](const std::vector<Integer>& y) {
      LatticeVector f = f0;
      for (std::size_t i = 0; i < kComplementRank; ++i) {
        if (y[i] != 0) f += y[i] * basis_[i];
      }
      if (self_int(f) == 0) found.push_back(std::move(f));
    });
    std::sort(found.begin(), found.end());
    return found;
  }

 private:
  Integer content_;
  LatticeVector base_solution_;
  std::array<LatticeVector, kComplementRank> basis_;
  en::LdlFactors factors_;
};

}  // namespace

bool witness_preferred(const LatticeVector& a, const LatticeVector& b) {
  int c = cmp(max_abs(a), max_abs(b));
  if (c != 0) return c < 0;
  return a > b;
}

std::vector<LatticeVector> enumerate_isotropic_with_pairing(const LatticeVector& h,
                                                            const Integer& c) {
  require_positive_square(h);
  if (c < 1) throw std::invalid_argument("enumerate_isotropic_with_pairing: c must be >= 1");
  return IsotropicSlicer(h).solutions(c);
}

PhiResult phi(const LatticeVector& h) {
  require_positive_square(h);
  // For forward H every F with H.F > 0 is forward too.
  const LatticeVector forward_h = is_forward(h) ? h : -h;
  const IsotropicSlicer slicer(forward_h);

  // H^2 > 0 forces both hyperbolic coordinates nonzero, and f1, f2 realize
  // |H.f1| = |H[1]|, |H.f2| = |H[0]|.
  const Integer a0 = abs(h[0]);
  const Integer a1 = abs(h[1]);
  const Integer upper = a0 < a1 ? a0 : a1;
  const Integer& step = slicer.content_of_h();
  for (Integer c = step; c <= upper; c += step) {
    std::vector<LatticeVector> sols = slicer.solutions(c);
    if (sols.empty()) continue;
    LatticeVector best = *std::min_element(sols.begin(), sols.end(), witness_preferred);
    const Integer g = content(best);
    if (g != 1) {
      for (std::size_t i = 0; i < kRank; ++i) mpz_divexact(best[i].get_mpz_t(), best[i].get_mpz_t(), g.get_mpz_t());
    }
    return {abs(pair(h, best)), std::move(best)};
  }
  throw std::logic_error("phi: no isotropic class up to the hyperbolic bound");
}

}  // namespace enriques
