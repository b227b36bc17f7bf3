#include "enriques/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "enriques/errors.hpp"

namespace enriques {
namespace {

// Edges of the E8 Dynkin diagram, Bourbaki numbering (1-based).
constexpr std::array<std::pair<int, int>, 7> kE8Edges = {{
    {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4},
}};

struct GramTable {
  std::array<std::array<int, kRank>, kRank> g{};

  constexpr GramTable() {
    g[0][1] = g[1][0] = 1;
    for (std::size_t i = 2; i < kRank; ++i) g[i][i] = -2;
    for (auto [a, b] : kE8Edges) {
      g[a + 1][b + 1] = g[b + 1][a + 1] = 1;
    }
  }
};

constexpr GramTable kGram{};

}  // namespace

LatticeVector::LatticeVector(std::initializer_list<long> values) {
  if (values.size() != kRank) {
    throw std::invalid_argument("LatticeVector needs exactly 10 coordinates");
  }
  std::size_t i = 0;
  for (long v : values) coords_[i++] = v;
}

LatticeVector LatticeVector::unit(std::size_t index) {
  LatticeVector v;
  v.coords_.at(index) = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  for (std::size_t i = 0; i < kRank; ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  for (std::size_t i = 0; i < kRank; ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
  return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
  for (std::size_t i = 0; i < kRank; ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '[';
  for (std::size_t i = 0; i < kRank; ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  return os << ']';
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

int gram_entry(std::size_t i, std::size_t j) { return kGram.g.at(i).at(j); }

LatticeVector dual_coords(const LatticeVector& x) {
  LatticeVector r;
  for (std::size_t i = 0; i < kRank; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < kRank; ++j) {
      int g = kGram.g[i][j];
      if (g != 0) s += g * x[j];
    }
    r[i] = std::move(s);
  }
  return r;
}

Integer pair(const LatticeVector& x, const LatticeVector& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < kRank; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < kRank; ++j) {
      int g = kGram.g[i][j];
      if (g != 0 && y[j] != 0) s += g * x[i] * y[j];
    }
  }
  return s;
}

Integer self_int(const LatticeVector& x) { return pair(x, x); }

Integer content(const LatticeVector& x) {
  Integer g = 0;
  for (const auto& c : x.coords()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

bool is_forward(const LatticeVector& x) {
  if (x.is_zero()) throw PreconditionError("is_forward: x = 0 lies in neither cone component");
  Integer sq = self_int(x);
  if (sq < 0) {
    throw PreconditionError("is_forward: x^2 = " + sq.get_str() + " < 0");
  }
  // pair(x, f1) = x[1], pair(x, f2) = x[0].
  Integer against_sum = x[0] + x[1];
  if (against_sum != 0) return against_sum > 0;
  const Integer& against_f1 = x[1];
  if (against_f1 != 0) return against_f1 > 0;
  return x[0] > 0;
}

Integer gram_determinant() {
  // Fraction-free Bareiss elimination with row pivoting.
  std::vector<std::vector<Integer>> m(kRank, std::vector<Integer>(kRank));
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) m[i][j] = kGram.g[i][j];

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < kRank; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < kRank && m[p][k] == 0) ++p;
      if (p == kRank) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < kRank; ++i) {
      for (std::size_t j = k + 1; j < kRank; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[kRank - 1][kRank - 1];
}

Signature gram_signature() {
  // Congruence diagonalization over Q. A zero pivot with a nonzero entry in
  // its row is fixed by adding that row/column to the pivot row/column.
  std::vector<std::vector<Rational>> a(kRank, std::vector<Rational>(kRank));
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) a[i][j] = kGram.g[i][j];

  Signature sig;
  for (std::size_t k = 0; k < kRank; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < kRank && a[p][p] == 0) ++p;
      if (p < kRank) {
        std::swap(a[k], a[p]);
        for (auto& row : a) std::swap(row[k], row[p]);
      } else {
        std::size_t q = k + 1;
        while (q < kRank && a[k][q] == 0) ++q;
        if (q == kRank) {
          ++sig.zero;
          continue;
        }
        for (std::size_t j = 0; j < kRank; ++j) a[k][j] += a[q][j];
        for (std::size_t i = 0; i < kRank; ++i) a[i][k] += a[i][q];
      }
    }
    const Rational pivot = a[k][k];
    for (std::size_t i = k + 1; i < kRank; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / pivot;
      for (std::size_t j = k; j < kRank; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t j = k + 1; j < kRank; ++j) a[k][j] = 0;
    if (pivot > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
  }
  return sig;
}

}  // namespace enriques
