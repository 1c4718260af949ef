#include "godeaux/picard_lattice.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace godeaux;
using namespace godeaux::lattice;

TEST(E8Roots, MatchBruteForceOverSmallBox) {
  // Oracle: every doubled-coordinate vector in [-2, 2]^8 that lies in E8 and
  // has true norm 2 (doubled norm 8).
  std::set<E8Vector> brute;
  E8Vector::Coords c;
  std::function<void(int)> rec = [&](int i) {
    if (i == kRank) {
      if (!E8Vector::is_lattice_vector(c)) return;
      int n = 0;
      for (int x : c) n += x * x;
      if (n == 8) brute.insert(E8Vector(c));
      return;
    }
    for (int v = -2; v <= 2; ++v) {
      c[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  const auto roots = e8_roots();
  EXPECT_EQ(roots.size(), 240u);
  EXPECT_EQ(std::set<E8Vector>(roots.begin(), roots.end()), brute);
}

TEST(E8Roots, NormsAndShapes) {
  const PicardClass a{0, E8Vector({2, 2, 0, 0, 0, 0, 0, 0}), 0};
  const PicardClass b{0, E8Vector({1, 1, 1, 1, 1, 1, 1, 1}), 0};
  EXPECT_EQ(pairing(a, a), -2);
  EXPECT_EQ(pairing(b, b), -2);
  int integral = 0, half = 0;
  for (const auto& r : e8_roots()) {
    (r.doubled()[0] % 2 == 0 ? integral : half)++;
    const PicardClass e{0, r, 0};
    EXPECT_EQ(pairing(e, e), -2);
    EXPECT_EQ(pairing(e, PicardClass::canonical()), 0);
  }
  EXPECT_EQ(integral, 112);
  EXPECT_EQ(half, 128);
  EXPECT_THROW(E8Vector({1, 0, 0, 0, 0, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(E8Vector({1, 1, 1, 1, 1, 1, 1, -1}), std::invalid_argument);
}

TEST(Lattice, GramDeterminantAndDefiniteness) {
  const auto g = negative_gram_matrix();
  EXPECT_EQ(abs(determinant(g)), 1);
  IntMatrix pos = g;
  for (auto& row : pos)
    for (auto& x : row) x = -x;
  for (const auto& m : leading_principal_minors(pos)) EXPECT_GT(m, 0);
  EXPECT_EQ(rank(g), 8u);
  for (int i = 0; i < kRank; ++i) EXPECT_EQ(g[i][i], -2);
}

TEST(Lattice, ChecksAllPass) {
  const auto checks = lattice_checks();
  EXPECT_GE(checks.size(), 8u);
  for (const auto& c : checks) EXPECT_EQ(c.status, Status::pass) << c.id << " " << c.actual;
}

TEST(Pairing, SymmetricBilinearTorsionBlind) {
  std::mt19937_64 rng(1);
  const auto roots = e8_roots();
  auto random_class = [&] {
    return PicardClass{static_cast<std::int64_t>(rng() % 7) - 3, roots[rng() % 240] + roots[rng() % 240],
                       static_cast<int>(rng() % 5)};
  };
  for (int t = 0; t < 200; ++t) {
    const auto a = random_class(), b = random_class(), c = random_class();
    EXPECT_EQ(pairing(a, b), pairing(b, a));
    EXPECT_EQ(pairing(a + b, c), pairing(a, c) + pairing(b, c));
    EXPECT_EQ(pairing(a + PicardClass::torsion(3), b), pairing(a, b));
  }
}

TEST(Divisors, CandidatesAndNumerics) {
  const auto ds = divisor_candidates();
  ASSERT_EQ(ds.size(), 1200u);
  EXPECT_EQ(std::set<PicardClass>(ds.begin(), ds.end()).size(), 1200u);
  const auto K = PicardClass::canonical();
  for (const auto& d : ds) {
    EXPECT_EQ(pairing(d, d), -1);
    EXPECT_EQ(pairing(d, K), 1);
    EXPECT_EQ(pairing(d, d - K), -2);
  }
}

TEST(Orbits, PartitionIntoTenElementSets) {
  const auto orbits = partition_orbits();
  ASSERT_EQ(orbits.size(), 120u);
  std::set<PicardClass> all;
  const auto K = PicardClass::canonical();
  for (const auto& o : orbits) {
    ASSERT_EQ(o.members.size(), 10u);
    const std::set<PicardClass> members(o.members.begin(), o.members.end());
    for (const auto& m : o.members) {
      EXPECT_TRUE(members.contains(K - (m - K)) || members.contains(PicardClass{1, -(m.e), m.t}));
      EXPECT_TRUE(members.contains(m + PicardClass::torsion(1)));  // torsion acts on each orbit
      all.insert(m);
    }
  }
  EXPECT_EQ(all.size(), 1200u);
}

TEST(Counts, ModelBounds) {
  const auto c = divisor_counts();
  EXPECT_EQ(c.candidates, 1200);
  EXPECT_EQ(c.good_lower_bound, 1080);
  EXPECT_EQ(c.excellent_lower_bound, 840);
  EXPECT_EQ(c.good_lower_bound, 120 * 9);
  EXPECT_EQ(c.excellent_lower_bound, 120 * 7);
}

TEST(DivisorConditions, PassForCandidatesFailForK) {
  const auto K = PicardClass::canonical();
  const PicardClass D = K + PicardClass{0, e8_roots()[17], 2};
  for (const auto& C : canonical_curves())
    for (const auto& c : verify_divisor_conditions(D, C)) EXPECT_EQ(c.status, Status::pass) << c.id;
  const auto bad = verify_divisor_conditions(K, K);
  EXPECT_EQ(bad.front().id, "divisor.E_squared");
  EXPECT_EQ(bad.front().status, Status::fail);
  EXPECT_EQ(canonical_curves().size(), 4u);
}

TEST(DivisorConditions, FullSweep) {
  std::size_t passing = 0;
  for (const auto& D : divisor_candidates())
    for (const auto& C : canonical_curves()) {
      const auto cs = verify_divisor_conditions(D, C);
      passing += std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.status == Status::pass; });
    }
  EXPECT_EQ(passing, 4800u);
}
