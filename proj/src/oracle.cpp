#include "enriques/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "enriques/errors.hpp"

namespace enriques {
namespace {

// Cartan matrix of E8, Bourbaki numbering, written out independently of the
// Gram table in lattice.cpp.
constexpr int kCartan[8][8] = {
    {2, 0, -1, 0, 0, 0, 0, 0},   //
    {0, 2, 0, -1, 0, 0, 0, 0},   //
    {-1, 0, 2, -1, 0, 0, 0, 0},  //
    {0, -1, -1, 2, -1, 0, 0, 0}, //
    {0, 0, 0, -1, 2, -1, 0, 0},  //
    {0, 0, 0, 0, -1, 2, -1, 0},  //
    {0, 0, 0, 0, 0, -1, 2, -1},  //
    {0, 0, 0, 0, 0, 0, -1, 2},   //
};

constexpr std::int64_t kCoordLimit = std::int64_t{1} << 40;

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

std::int64_t to_small(const Integer& x) {
  if (abs(x) >= kCoordLimit) throw std::out_of_range("box oracle: coordinate too large");
  return x.get_si();
}

}  // namespace

IsotropicBoxOracle::IsotropicBoxOracle(int radius) : radius_(radius) {
  if (radius < 1 || radius > 100) throw std::invalid_argument("box oracle: radius must be in 1..100");
  const int r = radius;
  const std::int64_t max_half = static_cast<std::int64_t>(r) * r;

  // Q(v) = sum_i v_i (C v)_i accumulated one coordinate at a time: fixing
  // v_i adds C_ii v_i^2 + 2 v_i sum_{j<i} C_ij v_j.
  std::array<std::int8_t, 8> v{};
  auto visit = [&](auto&& self, int level, std::int64_t partial) -> void {
    std::int64_t cross = 0;
    for (int j = 0; j < level; ++j) cross += kCartan[level][j] * v[j];
    for (int x = -r; x <= r; ++x) {
      const std::int64_t q = partial + 2LL * x * x + 2LL * x * cross;
      v[level] = static_cast<std::int8_t>(x);
      if (level == 7) {
        // Q is even on E8.
        if (q <= 2 * max_half) table_.push_back({v, static_cast<std::int32_t>(q / 2)});
      } else {
        self(self, level + 1, q);
      }
    }
  };
  visit(visit, 0, 0);
}

std::optional<Integer> IsotropicBoxOracle::min_abs_pairing(const LatticeVector& h) const {
  const Integer sq = self_int(h);
  if (sq <= 0) throw PreconditionError("H^2 = " + sq.get_str() + ": φ undefined");

  const std::int64_t a = to_small(h[0]);  // H.f2
  const std::int64_t b = to_small(h[1]);  // H.f1
  // pair(H_E8, v) = -sum h_i C_ij v_j
  std::array<std::int64_t, 8> w{};
  for (int j = 0; j < 8; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i < 8; ++i) s += to_small(h[i + 2]) * kCartan[i][j];
    w[j] = -s;
  }

  const int r = radius_;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const Entry& e : table_) {
    std::int64_t hv = 0;
    for (int j = 0; j < 8; ++j) hv += w[j] * e.v[j];
    if (e.half_norm == 0) {
      // v = 0 here (Q is definite): F = p f1 or q f2 with p, q != 0.
      best = std::min(best, abs64(b));
      best = std::min(best, abs64(a));
      continue;
    }
    const std::int64_t m = e.half_norm;
    for (std::int64_t p = 1; p <= r; ++p) {
      if (m % p != 0) continue;
      const std::int64_t q = m / p;
      if (q > r) continue;
      best = std::min(best, abs64(b * p + a * q + hv));
      best = std::min(best, abs64(-b * p - a * q + hv));
    }
  }
  if (best == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return Integer(static_cast<long>(best));
}

std::optional<Integer> phi_bruteforce(const LatticeVector& h, int radius) {
  return IsotropicBoxOracle(radius).min_abs_pairing(h);
}

}  // namespace enriques
