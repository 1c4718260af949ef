#pragma once

// The twelve-parameter family of Z/5-invariant quintics in P^3 whose free
// quotients are Godeaux surfaces, with brute-force checks over F_q.

#include "godeaux/diophantine.hpp"
#include "godeaux/exact_arith.hpp"
#include "godeaux/polynomial.hpp"

#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace godeaux::quintic {

using MonomialExponent = std::array<int, 4>;

inline constexpr std::size_t kMonomialCount = 12;

// Canonical order n_1, ..., n_12 of the invariant monomials.
inline constexpr std::array<MonomialExponent, kMonomialCount> kMonomialOrder{{
    {5, 0, 0, 0},
    {3, 0, 1, 1},
    {2, 1, 2, 0},
    {2, 2, 0, 1},
    {1, 3, 1, 0},
    {1, 1, 0, 3},
    {1, 0, 2, 2},
    {0, 5, 0, 0},
    {0, 0, 5, 0},
    {0, 0, 0, 5},
    {0, 2, 1, 2},
    {0, 1, 3, 1},
}};

/// Monomials z^n with sum(n) = 5 and sum(i n_i) = 0 mod 5, found by
/// exhaustive search and returned in canonical order.
inline std::vector<MonomialExponent> enumerate_monomials() {
  std::set<MonomialExponent> found;
  for (const auto& s : diophantine::solve_monomial_system())
    found.insert({static_cast<int>(s[0]), static_cast<int>(s[1]), static_cast<int>(s[2]), static_cast<int>(s[3])});
  const std::set<MonomialExponent> canonical(kMonomialOrder.begin(), kMonomialOrder.end());
  if (found != canonical) throw std::logic_error("invariant monomial search disagrees with the canonical list");
  return {kMonomialOrder.begin(), kMonomialOrder.end()};
}

/// Coefficients a_1..a_12 as integers; reduced modulo each prime on use.
struct QuinticCoefficients {
  std::array<std::int64_t, kMonomialCount> a{};

  static QuinticCoefficients fermat() {
    QuinticCoefficients c;
    c.a[0] = c.a[7] = c.a[8] = c.a[9] = 1;
    return c;
  }
  static QuinticCoefficients all_ones() {
    QuinticCoefficients c;
    c.a.fill(1);
    return c;
  }
  static QuinticCoefficients single(std::size_t index, std::int64_t value = 1) {
    QuinticCoefficients c;
    c.a.at(index) = value;
    return c;
  }
};

inline SparsePolynomial<FieldElement> build_quintic(const QuinticCoefficients& c, std::uint64_t q) {
  if (!is_prime(q) || q % 5 != 1) throw std::invalid_argument("quintic family needs a prime q = 1 mod 5");
  SparsePolynomial<FieldElement> p(4);
  for (std::size_t i = 0; i < kMonomialCount; ++i) {
    const auto& n = kMonomialOrder[i];
    p.add_term({n[0], n[1], n[2], n[3]}, FieldElement(c.a[i], q));
  }
  if (p.is_zero()) throw std::invalid_argument("all quintic coefficients vanish mod " + std::to_string(q));
  return p;
}

/// Diagonal element z_j -> eps^{w_j} z_j of (Z/5)^4 acting on P^3.
struct GroupElement {
  std::array<int, 4> weights{};

  static GroupElement generator() { return {{1, 2, 3, 4}}; }
  static GroupElement identity() { return {{0, 0, 0, 0}}; }

  GroupElement pow(int k) const {
    GroupElement g;
    for (int j = 0; j < 4; ++j) g.weights[j] = ((weights[j] * k) % 5 + 5) % 5;
    return g;
  }

  /// Projectively trivial iff all weights agree.
  bool is_identity() const {
    for (int w : weights)
      if ((w - weights[0]) % 5 != 0) return false;
    return true;
  }

  bool has_distinct_weights() const {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if ((weights[i] - weights[j]) % 5 == 0) return false;
    return true;
  }

  std::vector<FieldElement> scalars(std::uint64_t q) const {
    const auto eps = primitive_fifth_root(q);
    std::vector<FieldElement> s;
    for (int w : weights) s.push_back(eps.pow(static_cast<std::uint64_t>(((w % 5) + 5) % 5)));
    return s;
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Applies g to the polynomial: f(z) -> f(eps^{w_1} z_1, ..., eps^{w_4} z_4).
inline SparsePolynomial<FieldElement> transform(const SparsePolynomial<FieldElement>& p, const GroupElement& g,
                                                std::uint64_t q) {
  const auto s = g.scalars(q);
  SparsePolynomial<FieldElement> out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    FieldElement t = c;
    for (std::size_t j = 0; j < e.size(); ++j) t = t * s[j].pow(static_cast<std::uint64_t>(e[j]));
    out.add_term(e, t);
  }
  return out;
}

/// True iff g maps the quintic to a scalar multiple of itself.
inline bool invariance_check(const QuinticCoefficients& c, const GroupElement& g, std::uint64_t q) {
  const auto p = build_quintic(c, q);
  const auto gp = transform(p, g, q);
  const auto& [e0, c0] = *p.terms().begin();
  const FieldElement ratio = *gp.coefficient(e0) / c0;
  return gp == p.scaled(ratio);
}

/// Fixed points of g on P^3. For pairwise distinct weights these are the
/// eigenlines of the diagonal matrix, i.e. the coordinate points.
inline std::vector<ProjectivePoint> fixed_points(const GroupElement& g, std::uint64_t q) {
  if (g.is_identity()) throw std::invalid_argument("identity fixes every point");
  if (!g.has_distinct_weights())
    throw std::invalid_argument("repeated weights give a positive-dimensional fixed locus");
  std::vector<ProjectivePoint> out;
  for (std::size_t j = 0; j < 4; ++j) {
    std::vector<std::uint64_t> x(4, 0);
    x[j] = 1;
    out.emplace_back(std::move(x), q);
  }
  return out;
}

struct FreeActionResult {
  bool by_evaluation;
  bool by_coefficients;
};

/// Both routes for freeness: no fixed point of the generator lies on the
/// quintic, versus a_1 a_8 a_9 a_10 != 0 mod q.
inline FreeActionResult free_action_routes(const QuinticCoefficients& c, std::uint64_t q) {
  const auto p = build_quintic(c, q);
  bool none_on_surface = true;
  for (const auto& pt : fixed_points(GroupElement::generator(), q))
    none_on_surface = none_on_surface && !poly_eval(p, pt.elements()).is_zero();
  const FieldElement product =
      FieldElement(c.a[0], q) * FieldElement(c.a[7], q) * FieldElement(c.a[8], q) * FieldElement(c.a[9], q);
  return {none_on_surface, !product.is_zero()};
}

inline bool free_action_check(const QuinticCoefficients& c, std::uint64_t q) {
  const auto r = free_action_routes(c, q);
  if (r.by_evaluation != r.by_coefficients) throw std::logic_error("free-action routes disagree");
  return r.by_evaluation;
}

/// No point of P^3(F_q) where the quintic and its four partials vanish.
/// Singular points defined only over extensions of F_q are not searched.
inline bool smoothness_check(const QuinticCoefficients& c, std::uint64_t q) {
  return hypersurface_is_smooth_over(build_quintic(c, q), q);
}

/// The plane section {z_plane = 0} (plane_index in 1..4) is a smooth plane
/// curve over F_q.
inline bool transversality_check(const QuinticCoefficients& c, int plane_index, std::uint64_t q) {
  if (plane_index < 1 || plane_index > 4) throw std::out_of_range("plane index must be in 1..4");
  const auto section = restrict_to_coordinate_hyperplane(build_quintic(c, q), static_cast<std::size_t>(plane_index - 1));
  return hypersurface_is_smooth_over(section, q);
}

/// Rank over Q of the rows n_i - n_1.
inline std::size_t weight_difference_rank(const std::vector<MonomialExponent>& monomials) {
  if (monomials.size() < 2) return 0;
  IntMatrix m;
  for (std::size_t i = 1; i < monomials.size(); ++i) {
    std::vector<std::int64_t> row;
    for (int j = 0; j < 4; ++j) row.push_back(monomials[i][j] - monomials[0][j]);
    m.push_back(std::move(row));
  }
  return rank(m);
}

/// Dimension of the moduli of the family: the projective coefficient space
/// minus the orbit dimension of the diagonal torus modulo scalars.
inline int family_dimension(const std::vector<MonomialExponent>& monomials) {
  if (monomials.empty()) throw std::invalid_argument("empty family");
  return static_cast<int>(monomials.size()) - 1 - static_cast<int>(weight_difference_rank(monomials));
}

inline int family_dimension() { return family_dimension(enumerate_monomials()); }

/// Hyperplanes of P^3 invariant under g, as the unit exponent of their
/// linear form (z_j = 0 <-> e_j). Requires pairwise distinct weights so that
/// the dual action has four distinct eigenvalues.
inline std::vector<MonomialExponent> invariant_hyperplanes(const GroupElement& g = GroupElement::generator()) {
  if (!g.has_distinct_weights())
    throw std::invalid_argument("repeated weights give infinitely many invariant hyperplanes");
  std::vector<MonomialExponent> out;
  for (int j = 0; j < 4; ++j) {
    MonomialExponent e{};
    e[j] = 1;
    out.push_back(e);
  }
  return out;
}

}  // namespace godeaux::quintic
