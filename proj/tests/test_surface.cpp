#include <gtest/gtest.h>

#include "enriques/errors.hpp"
#include "enriques/phi.hpp"
#include "enriques/surface.hpp"
#include "support/generators.hpp"

using namespace enriques;
using enriques::testing::hyperbolic;
using enriques::testing::random_ample;
using enriques::testing::random_vector;

namespace {
const LatticeVector f1 = LatticeVector::f1();
const LatticeVector f2 = LatticeVector::f2();
}  // namespace

TEST(Surface, SectionalGenus) {
  EXPECT_EQ(sectional_genus(f1 + f2), 2);
  EXPECT_EQ(sectional_genus(hyperbolic(7, 7)), 50);
  EXPECT_EQ(sectional_genus(hyperbolic(2, 3)), 7);
  EXPECT_THROW(sectional_genus(f1), PreconditionError);
}

TEST(Surface, LinearSystemDimension) {
  EXPECT_EQ(linear_system_dim(f1 + f2), 1);
  EXPECT_EQ(linear_system_dim(hyperbolic(7, 7)), 49);
  EXPECT_THROW(linear_system_dim(f1), PreconditionError);
  EXPECT_THROW(linear_system_dim(-f1 - f2), PreconditionError);
}

TEST(Surface, AmpleAndNef) {
  EXPECT_TRUE(is_ample_on_s(f1 + f2));
  EXPECT_FALSE(is_ample_on_s(f1));
  EXPECT_FALSE(is_ample_on_s(-f1 - f2));
  EXPECT_FALSE(is_ample_on_s(f1 - f2));

  EXPECT_TRUE(is_nef_on_s(f1));
  EXPECT_TRUE(is_nef_on_s(f1 + f2));
  EXPECT_FALSE(is_nef_on_s(f1 - f2));
  EXPECT_TRUE(is_nef_on_s(LatticeVector{}));
  EXPECT_FALSE(is_nef_on_s(-f1));
}

TEST(Surface, KVeryAmple) {
  EXPECT_TRUE(is_k_very_ample(hyperbolic(2, 2), 0));
  EXPECT_TRUE(is_k_very_ample(hyperbolic(3, 3), 1));
  EXPECT_FALSE(is_k_very_ample(f1 + f2, 0));
  EXPECT_FALSE(is_k_very_ample(hyperbolic(3, 3), 2));
  EXPECT_FALSE(is_k_very_ample(-hyperbolic(3, 3), 1));
  EXPECT_THROW(is_k_very_ample(f1, 0), PreconditionError);
  EXPECT_THROW(is_k_very_ample(f1 + f2, -1), PreconditionError);
}

TEST(Surface, Report) {
  PolarizedSurfaceReport r = surface_report({hyperbolic(7, 7), false});
  EXPECT_EQ(r.h_squared, 98);
  EXPECT_EQ(r.genus, 50);
  EXPECT_EQ(r.linsys_dim, 49);
  EXPECT_EQ(r.phi, 7);
  EXPECT_EQ(r.max_k_very_ample, 5);

  PolarizedSurfaceReport low = surface_report({f1 + f2, true});
  EXPECT_EQ(low.phi, 1);
  EXPECT_EQ(low.max_k_very_ample, -1);
  EXPECT_TRUE(low.h.torsion);

  try {
    surface_report({-f1 - f2, false});
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "not ample: wrong cone component");
  }
}

TEST(SurfaceProperties, VeryAmplenessIsDownwardMonotone) {
  std::mt19937_64 g(31);
  for (int trial = 0; trial < 40; ++trial) {
    const LatticeVector h = random_ample(4, g);
    bool seen_false = false;
    for (long k = 0; k <= 6; ++k) {
      bool v = is_k_very_ample(h, k);
      if (seen_false) ASSERT_FALSE(v) << h << " k=" << k;
      if (!v) seen_false = true;
    }
  }
}

TEST(SurfaceProperties, UnnodalDichotomy) {
  std::mt19937_64 g(32);
  for (int trial = 0; trial < 1000; ++trial) {
    const LatticeVector l = random_vector(-4, 4, g);
    if (is_ample_on_s(l)) ASSERT_TRUE(is_nef_on_s(l));
    if (is_nef_on_s(l) && self_int(l) > 0) ASSERT_TRUE(is_ample_on_s(l));
  }
}

TEST(SurfaceProperties, GenusScaling) {
  std::mt19937_64 g(33);
  for (int trial = 0; trial < 200; ++trial) {
    const LatticeVector h = random_ample(5, g);
    const Integer genus = sectional_genus(h);
    for (long n = 1; n <= 6; ++n) ASSERT_EQ(sectional_genus(n * h), n * n * (genus - 1) + 1);
  }
}

TEST(SurfaceProperties, ReportInvariants) {
  std::mt19937_64 g(34);
  for (int trial = 0; trial < 40; ++trial) {
    const LatticeVector h = random_ample(4, g);
    PolarizedSurfaceReport r = surface_report({h, trial % 2 == 1});
    ASSERT_EQ(r.h_squared, 2 * r.genus - 2);
    ASSERT_EQ(r.linsys_dim, r.genus - 1);
    ASSERT_EQ(r.max_k_very_ample, std::max(Integer(r.phi - 2), Integer(-1)));
    if (r.max_k_very_ample >= 0) {
      ASSERT_TRUE(is_k_very_ample(h, r.max_k_very_ample.get_si()));
    }
    ASSERT_FALSE(is_k_very_ample(h, r.max_k_very_ample.get_si() + 1));
  }
}
