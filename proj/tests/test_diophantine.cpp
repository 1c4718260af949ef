#include "godeaux/diophantine.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace godeaux::diophantine;

namespace {
std::set<Solution> as_set(const std::vector<Solution>& v) { return {v.begin(), v.end()}; }
}  // namespace

TEST(Enumerate, BoxWithLinearAndModularConstraints) {
  BoxConstraint box{{0, 0}, {3, 3}, {{{1, 1}, 3, std::nullopt}}, {}};
  EXPECT_EQ(enumerate(box), (std::vector<Solution>{{0, 3}, {1, 2}, {2, 1}, {3, 0}}));
  BoxConstraint mod{{0}, {9}, {{{1}, 1, 4}}, {}};
  EXPECT_EQ(enumerate(mod), (std::vector<Solution>{{1}, {5}, {9}}));
  EXPECT_TRUE(enumerate(BoxConstraint{{2}, {1}, {}, {}}).empty());
}

TEST(MonomialSystem, TwelveSolutions) { EXPECT_EQ(solve_monomial_system().size(), 12u); }

// Oracle: a plain double loop over the same box.
TEST(SmoothQuadricCase, MatchesNaiveLoop) {
  std::set<Solution> naive;
  for (std::int64_t m = 0; m <= 5; ++m)
    for (std::int64_t n = 0; n <= 5; ++n)
      if (5 * (m + n) - 2 * m * n == 15) naive.insert({m, n});
  EXPECT_EQ(as_set(solve_smooth_quadric_case()), naive);
  EXPECT_EQ(naive, (std::set<Solution>{{0, 3}, {3, 0}, {5, 2}, {2, 5}}));
}

TEST(ConeCase, MatchesNaiveLoop) {
  std::set<Solution> naive;
  for (std::int64_t m = 0; m <= 5; ++m)
    for (std::int64_t n = 0; n <= 10; ++n)
      if (m * (m - 2 * n) + 5 * n == 15) naive.insert({m, n});
  EXPECT_EQ(as_set(solve_cone_case()), naive);
  EXPECT_EQ(naive, (std::set<Solution>{{0, 3}, {5, 2}}));
}

TEST(IntersectionIdentity, FiveTimesThree) {
  const auto id = intersection_identity();
  EXPECT_EQ(id.m1_dot_m2, 3);
  EXPECT_EQ(id.m1_squared, -1);
  EXPECT_EQ(id.pulled_back, 15);
}
