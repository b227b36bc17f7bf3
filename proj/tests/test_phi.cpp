#include <gtest/gtest.h>

#include <algorithm>
#include <iostream>
#include <set>

#include "enriques/errors.hpp"
#include "enriques/oracle.hpp"
#include "enriques/phi.hpp"
#include "support/generators.hpp"

using namespace enriques;
using enriques::testing::hyperbolic;
using enriques::testing::random_positive;

namespace {

const LatticeVector f1 = LatticeVector::f1();
const LatticeVector f2 = LatticeVector::f2();

// Plain scan of the full (2r+1)^10 box through the library's pair(); only
// usable for r <= 2. Independent of both the engine and the table oracle.
std::optional<long> naive_box_min(const LatticeVector& h, int r) {
  std::array<long, kRank> hd{};
  LatticeVector g = dual_coords(h);
  for (std::size_t i = 0; i < kRank; ++i) hd[i] = g[i].get_si();
  std::array<int, kRank> x{};
  std::optional<long> best;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == kRank) {
      bool zero = std::all_of(x.begin(), x.end(), [](int v) { return v == 0; });
      if (zero) return;
      long sq = 0;
      for (std::size_t a = 0; a < kRank; ++a)
        for (std::size_t b = 0; b < kRank; ++b) sq += gram_entry(a, b) * x[a] * x[b];
      if (sq != 0) return;
      long hp = 0;
      for (std::size_t a = 0; a < kRank; ++a) hp += hd[a] * x[a];
      hp = std::abs(hp);
      if (!best || hp < *best) best = hp;
      return;
    }
    for (int v = -r; v <= r; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return best;
}

// Isotropic F in the coordinate box with H.F = c, found by scanning the E8
// part and factoring p*q = -v^2/2. Test-only cross-check for the slices.
std::set<LatticeVector> isotropic_in_box(const LatticeVector& h, long c, int r) {
  std::set<LatticeVector> out;
  std::array<long, kRank> hd{};
  LatticeVector g = dual_coords(h);
  for (std::size_t i = 0; i < kRank; ++i) hd[i] = g[i].get_si();
  std::array<long, 8> v{};
  // sq and hv accumulate v^2 and H.v over the coordinates fixed so far.
  std::function<void(int, long, long)> rec = [&](int i, long sq, long hv) {
    if (i == 8) {
      const long half = -sq / 2;  // p * q must equal this
      // p is free, q then follows from the pairing when hd[1] != 0.
      for (long p = -r; p <= r; ++p) {
        const long rest = c - hd[0] * p - hv;
        long q_lo = -r, q_hi = r;
        if (hd[1] != 0) {
          if (rest % hd[1] != 0) continue;
          q_lo = q_hi = rest / hd[1];
          if (std::abs(q_lo) > r) continue;
        } else if (rest != 0) {
          continue;
        }
        for (long q = q_lo; q <= q_hi; ++q) {
          if (p * q != half) continue;
          if (p == 0 && q == 0 && std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }))
            continue;
          LatticeVector f;
          f[0] = p;
          f[1] = q;
          for (int a = 0; a < 8; ++a) f[a + 2] = v[a];
          out.insert(f);
        }
      }
      return;
    }
    long cross = 0;
    for (int j = 0; j < i; ++j) cross += gram_entry(i + 2, j + 2) * v[j];
    for (long x = -r; x <= r; ++x) {
      v[i] = x;
      rec(i + 1, sq + gram_entry(i + 2, i + 2) * x * x + 2 * cross * x, hv + hd[i + 2] * x);
    }
  };
  rec(0, 0, 0);
  return out;
}

Integer max_abs_coord(const LatticeVector& v) {
  Integer m = 0;
  for (const auto& c : v.coords())
    if (abs(c) > m) m = abs(c);
  return m;
}

void expect_valid_witness(const LatticeVector& h, const PhiResult& r) {
  EXPECT_EQ(self_int(r.witness), 0) << h;
  EXPECT_FALSE(r.witness.is_zero()) << h;
  EXPECT_EQ(content(r.witness), 1) << h;
  EXPECT_EQ(abs(pair(h, r.witness)), r.value) << h;
  EXPECT_TRUE(is_forward(r.witness)) << h;
}

}  // namespace

TEST(Phi, HyperbolicPlaneExamples) {
  PhiResult a = phi(f1 + f2);
  EXPECT_EQ(a.value, 1);
  EXPECT_EQ(a.witness, f1);

  PhiResult b = phi(2 * f1 + 3 * f2);
  EXPECT_EQ(b.value, 2);
  EXPECT_EQ(b.witness, f2);
}

TEST(Phi, NoClassOfPairingOneFor2f1Plus3f2) {
  // Derived by hand: F = p f1 + q f2 + v with 2pq = -v^2 >= 0 and 3p + 2q = 1
  // has no solution, so the c = 1 slice is empty.
  EXPECT_TRUE(enumerate_isotropic_with_pairing(2 * f1 + 3 * f2, Integer(1)).empty());
  EXPECT_EQ(naive_box_min(2 * f1 + 3 * f2, 1), 2);
}

TEST(Phi, ClosedFormFamily) {
  IsotropicBoxOracle oracle(2);
  for (long a = 1; a <= 12; ++a) {
    for (long b = 1; b <= 12; ++b) {
      const LatticeVector h = hyperbolic(a, b);
      PhiResult r = phi(h);
      EXPECT_EQ(r.value, std::min(a, b)) << a << "," << b;
      EXPECT_EQ(oracle.min_abs_pairing(h), Integer(std::min(a, b)));
      expect_valid_witness(h, r);
    }
  }
}

TEST(Phi, RejectsNonPositiveSquare) {
  EXPECT_THROW(phi(f1), PreconditionError);
  EXPECT_THROW(phi(f1 - f2), PreconditionError);
  EXPECT_THROW(phi(LatticeVector{}), PreconditionError);
  try {
    phi(f1);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "H^2 = 0: φ undefined");
  }
}

TEST(Phi, ArbitraryPrecisionCoordinates) {
  LatticeVector h = hyperbolic(0, 5);
  h[0] = Integer("123456789012345678901234567890");
  PhiResult r = phi(h);
  EXPECT_EQ(r.value, 5);
  EXPECT_EQ(r.witness, f1);
}

TEST(Phi, BackwardClassGetsForwardWitness) {
  PhiResult r = phi(-(2 * f1 + 3 * f2));
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.witness, f2);
}

TEST(IsotropicSlices, UnitHyperbolicSlice) {
  // p + q = 1 and pq = -v^2/2 >= 0 force {p, q} = {0, 1} and v = 0.
  std::vector<LatticeVector> sols = enumerate_isotropic_with_pairing(f1 + f2, Integer(1));
  ASSERT_EQ(sols.size(), 2u);
  EXPECT_EQ(sols[0], f2);
  EXPECT_EQ(sols[1], f1);
  for (const auto& f : sols) {
    EXPECT_EQ(self_int(f), 0);
    EXPECT_EQ(pair(f1 + f2, f), 1);
  }
  std::set<LatticeVector> boxed = isotropic_in_box(f1 + f2, 1, 4);
  EXPECT_EQ(boxed, std::set<LatticeVector>(sols.begin(), sols.end()));
}

TEST(IsotropicSlices, ContentMustDivide) {
  EXPECT_TRUE(enumerate_isotropic_with_pairing(2 * f1 + 2 * f2, Integer(1)).empty());
  EXPECT_FALSE(enumerate_isotropic_with_pairing(2 * f1 + 2 * f2, Integer(2)).empty());
}

TEST(IsotropicSlices, Preconditions) {
  EXPECT_THROW(enumerate_isotropic_with_pairing(f1, Integer(1)), PreconditionError);
  EXPECT_THROW(enumerate_isotropic_with_pairing(f1 + f2, Integer(0)), std::invalid_argument);
}

TEST(IsotropicSlices, AgreeWithBoxScanOnRandomClasses) {
  std::mt19937_64 g(42);
  for (int trial = 0; trial < 6; ++trial) {
    const LatticeVector h = random_positive(3, g);
    const long c = 1 + trial % 3;
    std::vector<LatticeVector> sols = enumerate_isotropic_with_pairing(h, Integer(c));
    ASSERT_TRUE(std::is_sorted(sols.begin(), sols.end()));
    ASSERT_EQ(std::adjacent_find(sols.begin(), sols.end()), sols.end());
    std::set<LatticeVector> in_box;
    for (const auto& f : sols) {
      ASSERT_EQ(self_int(f), 0);
      ASSERT_EQ(pair(h, f), c);
      if (max_abs_coord(f) <= 3) in_box.insert(f);
    }
    ASSERT_EQ(in_box, isotropic_in_box(h, c, 3)) << h << " c=" << c;
  }
}

TEST(BoxOracle, Examples) {
  EXPECT_EQ(phi_bruteforce(f1 + f2, 2), Integer(1));
  EXPECT_EQ(phi_bruteforce(3 * f1 + 5 * f2, 1), Integer(3));
  EXPECT_EQ(naive_box_min(3 * f1 + 5 * f2, 1), 3);
}

TEST(BoxOracle, MatchesNaiveScan) {
  IsotropicBoxOracle r1(1);
  std::mt19937_64 g(5);
  for (int trial = 0; trial < 25; ++trial) {
    const LatticeVector h = random_positive(4, g);
    auto naive = naive_box_min(h, 1);
    ASSERT_TRUE(naive.has_value());
    ASSERT_EQ(r1.min_abs_pairing(h), Integer(*naive)) << h;
  }
}

TEST(BoxOracle, MatchesNaiveScanRadiusTwo) {
  IsotropicBoxOracle r2(2);
  std::mt19937_64 g(17);
  for (int trial = 0; trial < 2; ++trial) {
    const LatticeVector h = random_positive(4, g);
    ASSERT_EQ(r2.min_abs_pairing(h), Integer(*naive_box_min(h, 2))) << h;
  }
}

TEST(BoxOracle, IsAnUpperBound) {
  IsotropicBoxOracle r1(1);
  std::mt19937_64 g(8);
  for (int trial = 0; trial < 50; ++trial) {
    const LatticeVector h = random_positive(4, g);
    ASSERT_GE(*r1.min_abs_pairing(h), phi(h).value);
  }
}

TEST(PhiProperties, OracleAgreement) {
  IsotropicBoxOracle r4(4);
  std::mt19937_64 g(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const LatticeVector h = random_positive(4, g);
    PhiResult r = phi(h);
    expect_valid_witness(h, r);
    ASSERT_LE(max_abs_coord(r.witness), 4) << h;
    ASSERT_EQ(r4.min_abs_pairing(h), r.value) << h;
  }
}

TEST(PhiProperties, ScalingSignAndTorsion) {
  std::mt19937_64 g(77);
  for (int trial = 0; trial < 20; ++trial) {
    const LatticeVector h = random_positive(3, g);
    const Integer base = phi(h).value;
    for (long n = 1; n <= 5; ++n) ASSERT_EQ(phi(n * h).value, n * base) << h;
    ASSERT_EQ(phi(-h).value, base);
    const PicClass twisted = PicClass{h, false}.twisted_by_canonical();
    ASSERT_EQ(phi(twisted.num).value, base);
  }
}

TEST(PhiProperties, ClassicalBound) {
  std::mt19937_64 g(3);
  for (int trial = 0; trial < 100; ++trial) {
    const LatticeVector h = random_positive(4, g);
    const Integer v = phi(h).value;
    // Classical for Enriques surfaces but not needed by the library: warn only.
    if (v * v > self_int(h)) {
      std::cerr << "warning: phi(H)^2 > H^2 for " << h << " (phi = " << v << ")\n";
    }
  }
}

TEST(PhiProperties, WitnessIsPreferredAmongMinimizers) {
  std::mt19937_64 g(11);
  for (int trial = 0; trial < 15; ++trial) {
    LatticeVector h = random_positive(3, g);
    if (!is_forward(h)) h = -h;
    PhiResult r = phi(h);
    for (const auto& f : enumerate_isotropic_with_pairing(h, r.value)) {
      ASSERT_FALSE(witness_preferred(f, r.witness)) << f << " beats " << r.witness;
    }
  }
}
