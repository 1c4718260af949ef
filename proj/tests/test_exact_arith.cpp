#include "godeaux/exact_arith.hpp"
#include "godeaux/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace godeaux;

TEST(FieldElement, ReducesAndWraps) {
  EXPECT_EQ(FieldElement(-1, 11).value(), 10u);
  EXPECT_EQ(FieldElement(23, 11).value(), 1u);
  EXPECT_EQ((FieldElement(7, 11) + FieldElement(6, 11)).value(), 2u);
  EXPECT_EQ((FieldElement(3, 11) - FieldElement(5, 11)).value(), 9u);
  EXPECT_EQ((FieldElement(4, 11) * FieldElement(6, 11)).value(), 2u);
}

TEST(FieldElement, InverseOnEveryNonzeroElement) {
  for (std::int64_t v = 1; v < 31; ++v) {
    const FieldElement x(v, 31);
    EXPECT_EQ((x * x.inverse()).value(), 1u);
  }
  EXPECT_THROW(FieldElement(0, 31).inverse(), std::domain_error);
}

TEST(FieldElement, RejectsMixedFields) {
  EXPECT_THROW(FieldElement(1, 11) + FieldElement(1, 31), std::invalid_argument);
}

TEST(PrimitiveFifthRoot, Examples) {
  EXPECT_EQ(primitive_fifth_root(11).value(), 3u);
  EXPECT_EQ(primitive_fifth_root(31).value(), 2u);
  EXPECT_THROW(primitive_fifth_root(7), std::invalid_argument);
  EXPECT_THROW(primitive_fifth_root(21), std::invalid_argument);
}

TEST(PrimitiveFifthRoot, SmallestOrderFiveElementByExhaustion) {
  for (std::uint64_t q : {11u, 31u, 41u, 61u, 71u, 101u}) {
    std::uint64_t smallest = 0;
    for (std::uint64_t g = 2; g < q && !smallest; ++g) {
      std::uint64_t p = 1;
      for (int i = 0; i < 5; ++i) p = p * g % q;
      if (p == 1) smallest = g;
    }
    const auto eps = primitive_fifth_root(q);
    EXPECT_EQ(eps.value(), smallest) << q;
    EXPECT_EQ(eps.pow(5).value(), 1u);
  }
}

TEST(ProjectivePoint, NormalizesFirstNonzeroCoordinate) {
  const ProjectivePoint a({0, 3, 6, 9}, 11), b({0, 1, 2, 3}, 11);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.coords(), (std::vector<std::uint64_t>{0, 1, 2, 3}));
  EXPECT_THROW(ProjectivePoint({0, 0, 0}, 11), std::invalid_argument);
}

TEST(ProjectivePoints, CountMatchesFormulaAndAreDistinct) {
  for (std::uint64_t q : {2u, 3u, 11u}) {
    const auto pts = projective_points(q, 3);
    EXPECT_EQ(pts.size(), q * q * q + q * q + q + 1);
    EXPECT_EQ(std::set<ProjectivePoint>(pts.begin(), pts.end()).size(), pts.size());
  }
  EXPECT_EQ(projective_point_count(11, 3), 1464u);
  EXPECT_EQ(projective_point_count(11, 2), 133u);
}

TEST(IntMatrix, DeterminantRankMinors) {
  const IntMatrix m{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  EXPECT_EQ(determinant(m), 4);
  EXPECT_EQ(rank(m), 3u);
  EXPECT_EQ(leading_principal_minors(m), (std::vector<BigInt>{2, 3, 4}));
  EXPECT_EQ(rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
}

TEST(SparsePolynomial, NoZeroTermsAndArity) {
  using P = SparsePolynomial<Rational>;
  P p(2);
  p.add_term({1, 0}, 3).add_term({1, 0}, -3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_THROW(p.add_term({1}, 1), std::invalid_argument);
  const P x = P::monomial({1, 0}, 1), y = P::monomial({0, 1}, 1);
  const P sq = (x + y) * (x + y);
  EXPECT_EQ(sq.size(), 3u);
  EXPECT_EQ(*sq.coefficient({1, 1}), 2);
  EXPECT_EQ(sq.total_degree(), 2);
}

TEST(PolyEval, FermatAtCoordinatePoint) {
  SparsePolynomial<FieldElement> f(4);
  for (int j = 0; j < 4; ++j) {
    Exponents e(4, 0);
    e[j] = 5;
    f.add_term(e, FieldElement(1, 11));
  }
  const std::vector<FieldElement> pt{FieldElement(1, 11), FieldElement(0, 11), FieldElement(0, 11), FieldElement(0, 11)};
  EXPECT_EQ(poly_eval(f, pt).value(), 1u);
  EXPECT_THROW(poly_eval(f, std::vector<FieldElement>(3, FieldElement(0, 11))), std::invalid_argument);
}

// Oracle: expand the derivative term by term from the definition.
TEST(PolyPartial, AgreesWithNaiveDifferentiation) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    SparsePolynomial<Rational> p(3);
    for (int t = 0; t < 6; ++t)
      p.add_term({int(rng() % 4), int(rng() % 4), int(rng() % 4)}, Rational(int(rng() % 9) - 4));
    for (std::size_t v = 0; v < 3; ++v) {
      SparsePolynomial<Rational> naive(3);
      for (const auto& [e, c] : p.terms()) {
        if (e[v] == 0) continue;
        auto d = e;
        d[v] -= 1;
        for (int k = 0; k < e[v]; ++k) naive.add_term(d, c);  // add c, e[v] times
      }
      EXPECT_EQ(poly_partial(p, v), naive);
    }
  }
}

TEST(Smoothness, FermatSmoothAndDegenerateSingular) {
  auto fermat = [](std::uint64_t q) {
    SparsePolynomial<FieldElement> f(4);
    for (int j = 0; j < 4; ++j) {
      Exponents e(4, 0);
      e[j] = 5;
      f.add_term(e, FieldElement(1, q));
    }
    return f;
  };
  EXPECT_TRUE(hypersurface_is_smooth_over(fermat(11), 11));
  EXPECT_TRUE(hypersurface_is_smooth_over(fermat(31), 31));
  const auto z1_fifth = SparsePolynomial<FieldElement>::monomial({5, 0, 0, 0}, FieldElement(1, 11));
  EXPECT_FALSE(hypersurface_is_smooth_over(z1_fifth, 11));
  EXPECT_FALSE(hypersurface_is_smooth_over(SparsePolynomial<FieldElement>(4), 11));
}

TEST(RestrictToHyperplane, DropsVariableAndTermsContainingIt) {
  SparsePolynomial<Rational> p(3);
  p.add_term({1, 1, 0}, 2).add_term({0, 2, 1}, 5);
  const auto r = restrict_to_coordinate_hyperplane(p, 0);
  EXPECT_EQ(r.num_vars(), 2u);
  EXPECT_EQ(r, SparsePolynomial<Rational>::monomial({2, 1}, 5));
}
