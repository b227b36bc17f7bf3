#pragma once

// The numerical lattice Num(S) = U + E8(-1) of an Enriques surface.
//
// Coordinates are taken in the fixed basis (f1, f2, e1, ..., e8): f1, f2 span
// a hyperbolic plane (f1^2 = f2^2 = 0, f1.f2 = 1) and e1..e8 are the simple
// roots of E8 in Bourbaki numbering with the negated Cartan matrix as Gram
// matrix. The full 10x10 Gram matrix is listed in docs/lattice.md.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>

namespace enriques {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::size_t kRank = 10;

class LatticeVector {
 public:
  using Coords = std::array<Integer, kRank>;

  LatticeVector() = default;
  explicit LatticeVector(Coords coords) : coords_(std::move(coords)) {}
  // Convenience for literals; throws std::invalid_argument unless exactly 10 values.
  LatticeVector(std::initializer_list<long> values);

  static LatticeVector unit(std::size_t index);
  static LatticeVector f1() { return unit(0); }
  static LatticeVector f2() { return unit(1); }
  // e(i) for i in 1..8.
  static LatticeVector e(std::size_t i) { return unit(i + 1); }

  const Coords& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Integer& scalar);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& s, LatticeVector v) { return v *= s; }
  friend LatticeVector operator*(long s, LatticeVector v) { return v *= Integer(s); }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b);
  // Lexicographic order on the coordinate tuple.
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

 private:
  Coords coords_{};
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);
// "[a, b, ...]" in decimal.
std::string to_string(const LatticeVector& v);

// A class in Pic(S): numerical part plus the 2-torsion bit recording an added K_S.
// Every numerical predicate reads only `num`.
struct PicClass {
  LatticeVector num;
  bool torsion = false;

  PicClass twisted_by_canonical() const { return {num, !torsion}; }
  friend bool operator==(const PicClass&, const PicClass&) = default;
};

// Gram matrix entry G(i, j) of the fixed basis.
int gram_entry(std::size_t i, std::size_t j);

Integer pair(const LatticeVector& x, const LatticeVector& y);
Integer self_int(const LatticeVector& x);
// gcd of the coordinates; 0 iff x = 0. Equals the divisibility of pair(x, -)
// because the Gram matrix is unimodular.
Integer content(const LatticeVector& x);
// Coordinates of the functional pair(x, -), i.e. G x.
LatticeVector dual_coords(const LatticeVector& x);

// Which component of {x^2 >= 0, x != 0} contains x. The forward component
// contains f1 + f2. Throws PreconditionError for x = 0 or x^2 < 0.
bool is_forward(const LatticeVector& x);

// Exact invariants of the Gram matrix.
Integer gram_determinant();
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Signature gram_signature();

}  // namespace enriques
