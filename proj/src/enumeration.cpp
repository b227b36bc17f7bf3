#include "enriques/enumeration.hpp"

#include <stdexcept>
#include <utility>

namespace enriques::enumeration {
namespace {

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Nearest integer, halves rounded up.
Integer round_of(const Rational& q) { return floor_of(q + Rational(1, 2)); }

// floor(sqrt(q)) for q >= 0; equals isqrt(floor(q)).
Integer floor_sqrt(const Rational& q) {
  Integer r;
  Integer f = floor_of(q);
  mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
  return r;
}

Rational squared(const Rational& q) { return q * q; }

}  // namespace

LdlFactors ldl_decompose(const IntMatrix& gram) {
  const std::size_t n = gram.size();
  LdlFactors f;
  f.lower.assign(n, std::vector<Rational>(n));
  f.diag.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw std::invalid_argument("ldl_decompose: matrix is not square");
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = gram[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= f.lower[i][k] * f.lower[j][k] * f.diag[k];
      f.lower[i][j] = s / f.diag[j];
    }
    Rational d = gram[i][i];
    for (std::size_t k = 0; k < i; ++k) d -= squared(f.lower[i][k]) * f.diag[k];
    if (d <= 0) throw std::domain_error("ldl_decompose: form is not positive definite");
    f.diag[i] = d;
    f.lower[i][i] = 1;
  }
  return f;
}

std::vector<Rational> solve(const LdlFactors& f, const std::vector<Rational>& rhs) {
  const std::size_t n = f.dim();
  // L u = rhs, then D v = u, then L^T x = v.
  std::vector<Rational> x(rhs);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < i; ++k) x[i] -= f.lower[i][k] * x[k];
  for (std::size_t i = 0; i < n; ++i) x[i] /= f.diag[i];
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t k = i + 1; k < n; ++k) x[i] -= f.lower[k][i] * x[k];
  return x;
}

Rational quadratic_form(const LdlFactors& f, const std::vector<Integer>& y,
                        const std::vector<Rational>& center) {
  const std::size_t n = f.dim();
  Rational total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    Rational t = 0;
    for (std::size_t i = k; i < n; ++i) t += f.lower[i][k] * (Rational(y[i]) - center[i]);
    total += f.diag[k] * squared(t);
  }
  return total;
}

void lll_reduce(IntMatrix& gram, IntMatrix& transform) {
  const std::size_t n = gram.size();
  transform.assign(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) transform[i][i] = 1;
  if (n < 2) return;

  const Rational delta(3, 4);
  // b_k <- b_k - r b_j
  auto reduce = [&](std::size_t k, std::size_t j, const Integer& r) {
    for (std::size_t c = 0; c < n; ++c) transform[k][c] -= r * transform[j][c];
    const Integer gkj = gram[k][j];
    gram[k][k] += r * r * gram[j][j] - 2 * r * gkj;
    for (std::size_t c = 0; c < n; ++c) {
      if (c == k) continue;
      gram[k][c] -= r * gram[j][c];
      gram[c][k] = gram[k][c];
    }
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(transform[a], transform[b]);
    std::swap(gram[a], gram[b]);
    for (auto& row : gram) std::swap(row[a], row[b]);
  };

  LdlFactors gso = ldl_decompose(gram);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      Integer r = round_of(gso.lower[k][j]);
      if (r == 0) continue;
      reduce(k, j, r);
      for (std::size_t i = 0; i <= j; ++i) gso.lower[k][i] -= Rational(r) * gso.lower[j][i];
    }
    const Rational& mu = gso.lower[k][k - 1];
    if (gso.diag[k] >= (delta - squared(mu)) * gso.diag[k - 1]) {
      ++k;
    } else {
      swap_rows(k, k - 1);
      gso = ldl_decompose(gram);
      k = k > 1 ? k - 1 : 1;
    }
  }
}

void enumerate_ellipsoid(const LdlFactors& f, const std::vector<Rational>& center,
                         const Rational& bound,
                         const std::function<void(const std::vector<Integer>&)>& visit) {
  const std::size_t n = f.dim();
  if (center.size() != n) throw std::invalid_argument("enumerate_ellipsoid: dimension mismatch");
  if (bound < 0) return;
  if (n == 0) {
    visit({});
    return;
  }

  std::vector<Integer> y(n);
  // Fix coordinates from the last one down; `remaining` is what is left of
  // the bound after the terms of levels > level.
  std::function<void(std::size_t, const Rational&)> descend =
      [&](std::size_t level, const Rational& remaining) {
        Rational shift = 0;
        for (std::size_t i = level + 1; i < n; ++i) {
          shift += f.lower[i][level] * (Rational(y[i]) - center[i]);
        }
        const Rational mid = center[level] - shift;
        const Rational radius_sq = remaining / f.diag[level];
        const Integer r = floor_sqrt(radius_sq);
        Integer lo = floor_of(mid) - r - 1;
        Integer hi = ceil_of(mid) + r + 1;
        while (lo <= hi && squared(Rational(lo) - mid) > radius_sq) ++lo;
        while (hi >= lo && squared(Rational(hi) - mid) > radius_sq) --hi;
        for (Integer v = lo; v <= hi; ++v) {
          y[level] = v;
          if (level == 0) {
            visit(y);
          } else {
            Rational used = f.diag[level] * squared(Rational(v) - mid);
            descend(level - 1, remaining - used);
          }
        }
      };
  descend(n - 1, bound);
}

}  // namespace enriques::enumeration
