#pragma once

// Bounded exhaustive integer solvers for the small equation systems behind the
// quintic family and the divisor-exclusion argument.

#include "godeaux/picard_lattice.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace godeaux::diophantine {

using Solution = std::vector<std::int64_t>;

/// sum(coefficients[i] * x[i]) == target, or == target (mod modulus).
struct LinearConstraint {
  std::vector<std::int64_t> coefficients;
  std::int64_t target = 0;
  std::optional<std::int64_t> modulus;

  bool satisfied_by(const Solution& x) const {
    std::int64_t s = std::inner_product(coefficients.begin(), coefficients.end(), x.begin(), std::int64_t{0});
    if (!modulus) return s == target;
    auto r = (s - target) % *modulus;
    return r == 0;
  }
};

struct BoxConstraint {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  std::vector<LinearConstraint> linear;
  // Extra non-linear condition; empty means none.
  std::function<bool(const Solution&)> predicate;
};

/// Every integer point of the box satisfying all constraints, in
/// lexicographic order.
inline std::vector<Solution> enumerate(const BoxConstraint& box) {
  const std::size_t n = box.lower.size();
  if (box.upper.size() != n) throw std::invalid_argument("box bounds of different lengths");
  for (std::size_t i = 0; i < n; ++i)
    if (box.lower[i] > box.upper[i]) return {};
  for (const auto& c : box.linear)
    if (c.coefficients.size() != n) throw std::invalid_argument("constraint arity differs from box dimension");

  std::vector<Solution> out;
  if (n == 0) return out;
  Solution x(box.lower);
  while (true) {
    bool ok = true;
    for (const auto& c : box.linear)
      if (!c.satisfied_by(x)) {
        ok = false;
        break;
      }
    if (ok && box.predicate) ok = box.predicate(x);
    if (ok) out.push_back(x);

    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < box.upper[i]) {
        ++x[i];
        break;
      }
      x[i] = box.lower[i];
      if (i == 0) return out;
    }
  }
}

/// Non-negative 4-tuples with n1+n2+n3+n4 = 5 and n1+2n2+3n3+4n4 = 0 mod 5.
inline std::vector<Solution> solve_monomial_system() {
  BoxConstraint box{{0, 0, 0, 0}, {5, 5, 5, 5}, {{{1, 1, 1, 1}, 5, std::nullopt}, {{1, 2, 3, 4}, 0, 5}}, {}};
  return enumerate(box);
}

/// 5(m+n) - 2mn = 15 with 0 <= m, n <= 5 (divisors on a smooth quadric).
inline std::vector<Solution> solve_smooth_quadric_case() {
  BoxConstraint box{{0, 0}, {5, 5}, {}, [](const Solution& s) { return 5 * (s[0] + s[1]) - 2 * s[0] * s[1] == 15; }};
  return enumerate(box);
}

/// m(m-2n) + 5n = 15 with 0 <= m <= 5, 0 <= n <= 10 (divisors on a quadric cone).
inline std::vector<Solution> solve_cone_case() {
  BoxConstraint box{{0, 0}, {5, 10}, {}, [](const Solution& s) { return s[0] * (s[0] - 2 * s[1]) + 5 * s[1] == 15; }};
  return enumerate(box);
}

struct IntersectionIdentity {
  std::int64_t m1_dot_m2;   // (K+E).(K-E+alpha) on X
  std::int64_t m1_squared;  // (K+E)^2 on X
  std::int64_t cover_degree;
  std::int64_t pulled_back;  // intersection of the preimages on the quintic
};

/// Intersection of the preimages of M1 = K+E and M2 = K-E+alpha on the
/// 5:1 cover, from the lattice model and the first E8 root.
inline IntersectionIdentity intersection_identity() {
  const auto e = lattice::e8_roots().front();
  const lattice::PicardClass m1{1, e, 0};
  const lattice::PicardClass m2{1, -e, 1};
  constexpr std::int64_t kCoverDegree = 5;
  const auto m12 = lattice::pairing(m1, m2);
  return {m12, lattice::pairing(m1, m1), kCoverDegree, kCoverDegree * m12};
}

}  // namespace godeaux::diophantine
