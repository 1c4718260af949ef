#include "godeaux/rr_engine.hpp"

#include <gtest/gtest.h>

using namespace godeaux;
using namespace godeaux::rr;

TEST(SurfaceInvariants, NoetherEnforced) {
  EXPECT_EQ(SurfaceInvariants::godeaux().b2(), 9);
  EXPECT_EQ(SurfaceInvariants::smooth_quintic().euler_number(), 55);
  EXPECT_THROW(SurfaceInvariants(1, 1, 10, 0, 0), std::invalid_argument);
  EXPECT_THROW(SurfaceInvariants(1, 1, 11, 0, 1), std::invalid_argument);
}

TEST(NumericalDivisor, ParityEnforced) {
  EXPECT_NO_THROW(NumericalDivisor(-1, 1));
  EXPECT_THROW(NumericalDivisor(1, 0), std::invalid_argument);
}

TEST(ChiDivisor, Examples) {
  const auto x = SurfaceInvariants::godeaux();
  EXPECT_EQ(chi_divisor(x, {-1, 1}), 0);
  EXPECT_EQ(chi_divisor(x, {0, 0}), 1);
  EXPECT_EQ(chi_divisor(x, {1, 1}), 1);
}

TEST(ChiDivisor, SerreSymmetry) {
  const auto x = SurfaceInvariants::godeaux();
  for (int d2 = -9; d2 <= 9; ++d2)
    for (int dk = -9; dk <= 9; ++dk) {
      if ((d2 - dk) % 2) continue;
      // (K - D)^2 = K^2 - 2 D.K + D^2, (K - D).K = K^2 - D.K
      EXPECT_EQ(chi_divisor(x, {d2, dk}), chi_divisor(x, {1 - 2 * dk + d2, 1 - dk}));
    }
}

TEST(AdjunctionGenus, Examples) {
  EXPECT_EQ(adjunction_genus({1, 1}), 2);
  EXPECT_EQ(adjunction_genus({1, -3}), 0);
  EXPECT_EQ(adjunction_genus({5, 5}), 6);
}

TEST(NoetherEuler, Examples) {
  EXPECT_EQ(noether_euler(1, 1), 11);
  EXPECT_EQ(noether_euler(5, 5), 55);
  EXPECT_EQ(noether_euler(1, 9), 3);
}

TEST(QuotientInvariants, Examples) {
  const auto x = quotient_invariants(SurfaceInvariants::smooth_quintic(), 5, 0, 0);
  EXPECT_EQ(x, SurfaceInvariants::godeaux());
  EXPECT_EQ(quotient_invariants(SurfaceInvariants::smooth_quintic(), 1), SurfaceInvariants::smooth_quintic());
  // A cover with e = 54 cannot exist consistently; divisibility is checked first.
  EXPECT_THROW(quotient_invariants(SurfaceInvariants(5, 6, 54, 0, 4), 5), std::invalid_argument);
}

TEST(PrespectralHilbert, GodeauxNumericsAndNegativeCase) {
  const auto x = SurfaceInvariants::godeaux();
  const NumericalDivisor D(-1, 1), C(1, 1);
  EXPECT_EQ(chi_divisor(x, combine(D, C, 1, 1)), 1);
  EXPECT_EQ(chi_divisor(x, combine(D, C, 1, 2)), 3);
  EXPECT_EQ(chi_divisor(x, combine(D, C, 1, 3)), 6);
  EXPECT_EQ(chi_divisor(x, combine(D, C, 1, 11)), 66);
  EXPECT_TRUE(prespectral_hilbert_check(x, D, C, 1, 10));
  EXPECT_TRUE(excellent_chi_check(x, D, C, 1, 10));
  EXPECT_FALSE(prespectral_hilbert_check(x, D, NumericalDivisor(1, -1), 1, 10));
}

TEST(Growth, LeadingCoefficient) {
  const auto x = SurfaceInvariants::godeaux();
  EXPECT_TRUE(growth_check(x, {1, 1}, 30));
  const auto fit = fit_chi_growth(x, {1, 1}, 30);
  EXPECT_EQ(fit.coeffs[2], Rational(1, 2));
  EXPECT_TRUE(fit.reproduces_all);
  EXPECT_FALSE(growth_check(x, {2, 2}, 30));
  EXPECT_EQ(fit_chi_growth(x, {2, 2}, 30).coeffs[2], 1);
}

TEST(CurveSheaf, Examples) {
  EXPECT_EQ(chi_curve_sheaf(2, 2), 1);
  EXPECT_EQ(chi_curve_sheaf(0, 0), 1);
  for (int n = 3; n < 10; ++n) EXPECT_EQ(h0_nonspecial(n, 2), n - 1);
  EXPECT_THROW(h0_nonspecial(2, 2), std::invalid_argument);
  EXPECT_THROW(chi_curve_sheaf(-1, 2), std::invalid_argument);
}
