#pragma once

// Exact lattice-point enumeration in ellipsoids of a positive definite
// integral quadratic form. Everything is done over Q, so points on the
// boundary are neither lost nor invented.

#include <functional>
#include <vector>

#include "enriques/lattice.hpp"

namespace enriques::enumeration {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

// M = L D L^T with L unit lower triangular. For a Gram matrix these are the
// Gram-Schmidt coefficients (mu) and squared lengths (B).
struct LdlFactors {
  RatMatrix lower;
  std::vector<Rational> diag;

  std::size_t dim() const { return diag.size(); }
};

// Throws std::domain_error if the matrix is not positive definite.
LdlFactors ldl_decompose(const IntMatrix& gram);

// Solves M x = rhs using the factors.
std::vector<Rational> solve(const LdlFactors& f, const std::vector<Rational>& rhs);

// Evaluates (y - c)^T M (y - c) through the factors.
Rational quadratic_form(const LdlFactors& f, const std::vector<Integer>& y,
                        const std::vector<Rational>& center);

// LLL-reduces the basis whose Gram matrix is `gram` (delta = 3/4). On return
// `gram` is the Gram matrix of the reduced basis and `transform` (unimodular,
// rows = new basis vectors in old coordinates) maps old to new.
void lll_reduce(IntMatrix& gram, IntMatrix& transform);

// Calls `visit` once for every integer vector y with
// (y - center)^T M (y - center) <= bound, where M = L D L^T.
void enumerate_ellipsoid(const LdlFactors& f, const std::vector<Rational>& center,
                         const Rational& bound,
                         const std::function<void(const std::vector<Integer>&)>& visit);

}  // namespace enriques::enumeration
