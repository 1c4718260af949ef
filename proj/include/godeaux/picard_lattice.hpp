#pragma once

// Model of Pic(X) = Z.K + (-E8) + Z/5 for a Godeaux surface with Z/5 torsion,
// and the divisor enumeration built on the 240 roots of E8.

#include "godeaux/exact_arith.hpp"
#include "godeaux/report.hpp"
#include "godeaux/rr_engine.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace godeaux::lattice {

inline constexpr int kRank = 8;
inline constexpr int kTorsionOrder = 5;

/// Vector of E8 in doubled coordinates: the true coordinates are c/2. Either
/// all entries are even or all are odd, and their sum is divisible by 4.
class E8Vector {
 public:
  using Coords = std::array<int, kRank>;

  E8Vector() : c_{} {}
  explicit E8Vector(const Coords& doubled) : c_(doubled) {
    if (!is_lattice_vector(doubled)) throw std::invalid_argument("not a vector of E8 in doubled coordinates");
  }

  static bool is_lattice_vector(const Coords& c) {
    const bool even = c[0] % 2 == 0;
    int sum = 0;
    for (int x : c) {
      if ((x % 2 == 0) != even) return false;
      sum += x;
    }
    return sum % 4 == 0;
  }

  const Coords& doubled() const { return c_; }
  bool is_zero() const { return c_ == Coords{}; }

  E8Vector operator-() const {
    Coords n;
    for (int i = 0; i < kRank; ++i) n[i] = -c_[i];
    return E8Vector(n);
  }
  friend E8Vector operator+(const E8Vector& a, const E8Vector& b) {
    Coords s;
    for (int i = 0; i < kRank; ++i) s[i] = a.c_[i] + b.c_[i];
    return E8Vector(s);
  }
  friend E8Vector operator-(const E8Vector& a, const E8Vector& b) { return a + (-b); }
  friend E8Vector operator*(int k, const E8Vector& a) {
    Coords s;
    for (int i = 0; i < kRank; ++i) s[i] = k * a.c_[i];
    return E8Vector(s);
  }

  friend bool operator==(const E8Vector&, const E8Vector&) = default;
  friend auto operator<=>(const E8Vector&, const E8Vector&) = default;

 private:
  Coords c_;
};

/// Euclidean product of the true coordinates (positive-definite E8 form).
inline std::int64_t euclidean_dot(const E8Vector& a, const E8Vector& b) {
  std::int64_t s = 0;
  for (int i = 0; i < kRank; ++i) s += std::int64_t{a.doubled()[i]} * b.doubled()[i];
  if (s % 4 != 0) throw std::logic_error("E8 inner product is not integral");
  return s / 4;
}

/// Class k*K + e + t*alpha; e lies in K-perp (where the form is -E8) and t is
/// a torsion tag in Z/5.
struct PicardClass {
  std::int64_t k = 0;
  E8Vector e;
  int t = 0;

  PicardClass() = default;
  PicardClass(std::int64_t k_, E8Vector e_, int t_) : k(k_), e(e_), t(((t_ % kTorsionOrder) + kTorsionOrder) % kTorsionOrder) {}

  static PicardClass canonical() { return {1, E8Vector{}, 0}; }
  static PicardClass torsion(int t) { return {0, E8Vector{}, t}; }

  friend PicardClass operator+(const PicardClass& a, const PicardClass& b) { return {a.k + b.k, a.e + b.e, a.t + b.t}; }
  friend PicardClass operator-(const PicardClass& a, const PicardClass& b) { return {a.k - b.k, a.e - b.e, a.t - b.t}; }
  PicardClass operator-() const { return {-k, -e, -t}; }

  friend bool operator==(const PicardClass&, const PicardClass&) = default;
  friend auto operator<=>(const PicardClass&, const PicardClass&) = default;
};

/// Intersection pairing k k' - (e.e'); torsion is numerically trivial.
inline std::int64_t pairing(const PicardClass& a, const PicardClass& b) { return a.k * b.k - euclidean_dot(a.e, b.e); }

struct PicardClassHash {
  std::size_t operator()(const PicardClass& c) const {
    std::size_t h = std::hash<std::int64_t>{}(c.k) ^ (std::hash<int>{}(c.t) << 1);
    for (int x : c.e.doubled()) h = h * 1000003u ^ std::hash<int>{}(x);
    return h;
  }
};

/// The 240 roots: 112 of shape (+-2,+-2,0^6) and 128 of shape (+-1)^8 with an
/// even number of minus signs, in lexicographic order.
inline std::vector<E8Vector> e8_roots() {
  std::vector<E8Vector> roots;
  for (int i = 0; i < kRank; ++i)
    for (int j = i + 1; j < kRank; ++j)
      for (int si : {-2, 2})
        for (int sj : {-2, 2}) {
          E8Vector::Coords c{};
          c[i] = si;
          c[j] = sj;
          roots.emplace_back(c);
        }
  for (unsigned mask = 0; mask < (1u << kRank); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    E8Vector::Coords c;
    for (int i = 0; i < kRank; ++i) c[i] = (mask >> i) & 1u ? -1 : 1;
    roots.emplace_back(c);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Simple roots of E8 in doubled coordinates (Bourbaki labelling).
inline std::array<E8Vector, kRank> e8_simple_roots() {
  return {E8Vector({1, -1, -1, -1, -1, -1, -1, 1}), E8Vector({2, 2, 0, 0, 0, 0, 0, 0}),
          E8Vector({-2, 2, 0, 0, 0, 0, 0, 0}),      E8Vector({0, -2, 2, 0, 0, 0, 0, 0}),
          E8Vector({0, 0, -2, 2, 0, 0, 0, 0}),      E8Vector({0, 0, 0, -2, 2, 0, 0, 0}),
          E8Vector({0, 0, 0, 0, -2, 2, 0, 0}),      E8Vector({0, 0, 0, 0, 0, -2, 2, 0})};
}

/// Gram matrix of the simple roots under the intersection form on K-perp,
/// i.e. the negative-definite form -E8.
inline IntMatrix negative_gram_matrix() {
  const auto basis = e8_simple_roots();
  IntMatrix g(kRank, std::vector<std::int64_t>(kRank));
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) g[i][j] = pairing({0, basis[i], 0}, {0, basis[j], 0});
  return g;
}

/// Classes E with E^2 = -2 and E.K = 0: every root with every torsion tag.
inline std::vector<PicardClass> minus_two_classes() {
  std::vector<PicardClass> out;
  for (const auto& r : e8_roots())
    for (int t = 0; t < kTorsionOrder; ++t) out.emplace_back(0, r, t);
  return out;
}

/// D = K + E for every E of minus_two_classes().
inline std::vector<PicardClass> divisor_candidates() {
  std::vector<PicardClass> out;
  for (const auto& e : minus_two_classes()) out.push_back(PicardClass::canonical() + e);
  return out;
}

/// The four curves C_j in |K + j.alpha|, j = 1..4.
inline std::vector<PicardClass> canonical_curves() {
  std::vector<PicardClass> out;
  for (int j = 1; j < kTorsionOrder; ++j) out.push_back(PicardClass::canonical() + PicardClass::torsion(j));
  return out;
}

/// {K + E + a, K - E + a : a in Z/5}.
struct DivisorClassOrbit {
  std::vector<PicardClass> members;
};

/// Splits the divisor candidates into the sets {K +- E + alpha}. Throws if
/// an orbit does not have exactly 10 members or the orbits fail to partition.
inline std::vector<DivisorClassOrbit> partition_orbits() {
  const auto candidates = divisor_candidates();
  std::map<E8Vector, DivisorClassOrbit> by_root_pair;
  for (const auto& d : candidates) {
    const E8Vector key = std::max(d.e, -d.e);
    by_root_pair[key].members.push_back(d);
  }
  std::vector<DivisorClassOrbit> orbits;
  std::unordered_set<PicardClass, PicardClassHash> seen;
  for (auto& [key, orbit] : by_root_pair) {
    if (orbit.members.size() != 2 * kTorsionOrder)
      throw std::logic_error("orbit of size " + std::to_string(orbit.members.size()) + ", expected 10");
    for (const auto& m : orbit.members)
      if (!seen.insert(m).second) throw std::logic_error("divisor class appears in two orbits");
    orbits.push_back(std::move(orbit));
  }
  if (seen.size() != candidates.size()) throw std::logic_error("orbits do not cover the candidate set");
  return orbits;
}

// Per-orbit exclusion model: at most one bad element (h^0(D) >= 1) and at most
// two members with h^0(K + D + alpha) = 2, one for each sign of E.
inline constexpr int kMaxBadPerOrbit = 1;
inline constexpr int kMaxDegeneratePerOrbit = 2;

struct DivisorCounts {
  std::int64_t candidates;
  std::int64_t good_lower_bound;
  std::int64_t excellent_lower_bound;
};

inline DivisorCounts divisor_counts(const std::vector<DivisorClassOrbit>& orbits) {
  DivisorCounts c{0, 0, 0};
  for (const auto& o : orbits) {
    const auto n = static_cast<std::int64_t>(o.members.size());
    c.candidates += n;
    c.good_lower_bound += n - kMaxBadPerOrbit;
    c.excellent_lower_bound += n - kMaxBadPerOrbit - kMaxDegeneratePerOrbit;
  }
  return c;
}

inline DivisorCounts divisor_counts() { return divisor_counts(partition_orbits()); }

inline rr::NumericalDivisor numerics(const PicardClass& d) {
  return {pairing(d, d), pairing(d, PicardClass::canonical())};
}

/// Unimodularity, evenness and definiteness of K-perp, plus root counts.
inline std::vector<Check> lattice_checks() {
  std::vector<Check> out;
  const auto gram = negative_gram_matrix();
  const auto det = determinant(gram);
  out.push_back(check_equal("lattice.gram_determinant_abs", "K-perp is unimodular", BigInt(1), abs(det), Provenance::derived));

  const auto roots = e8_roots();
  out.push_back(check_equal("lattice.root_count", "240 elements with e^2 = -2", 240, roots.size(), Provenance::paper));

  std::size_t norm_ok = 0, orthogonal_to_K = 0;
  for (const auto& r : roots) {
    const PicardClass c{0, r, 0};
    norm_ok += pairing(c, c) == -2;
    orthogonal_to_K += pairing(c, PicardClass::canonical()) == 0;
  }
  out.push_back(check_equal("lattice.root_norms", "(e_l^2) = -2", roots.size(), norm_ok, Provenance::paper));
  out.push_back(check_equal("lattice.roots_orthogonal_to_K", "(K, e_l) = 0", roots.size(), orthogonal_to_K, Provenance::paper));

  bool integral = true;
  try {
    for (const auto& a : roots)
      for (const auto& b : roots) (void)euclidean_dot(a, b);
  } catch (const std::logic_error&) {
    integral = false;
  }
  out.push_back(check_true("lattice.root_products_integral", "K-perp is an integral lattice", integral, Provenance::derived));

  bool even = true;
  for (int i = 0; i < kRank; ++i) even = even && gram[i][i] % 2 == 0;
  out.push_back(check_true("lattice.even_diagonal", "K-perp is even", even, Provenance::derived));

  IntMatrix positive(gram);
  for (auto& row : positive)
    for (auto& x : row) x = -x;
  const auto minors = leading_principal_minors(positive);
  bool all_positive = true;
  std::string listing;
  for (const auto& m : minors) {
    all_positive = all_positive && m > 0;
    listing += (listing.empty() ? "" : ",") + m.str();
  }
  out.push_back(check_true("lattice.negative_definite", "K-perp is negatively defined", all_positive, Provenance::derived,
                           "minors " + listing));

  const auto r = rank(gram);
  out.push_back(check_equal("lattice.rank", "K-perp of rank 8", 8, r, Provenance::paper));
  out.push_back(check_equal("lattice.picard_rank", "dim H^2(X,C) = 9", 9, r + 1, Provenance::paper));

  bool closed = true;
  for (const auto& x : roots) closed = closed && std::binary_search(roots.begin(), roots.end(), -x);
  out.push_back(check_true("lattice.root_negation_closure", "roots come in +- pairs", closed, Provenance::trivial));
  return out;
}

/// Numerical conditions on a pair (D, C) with D = K + E + torsion and C
/// numerically K. Every returned check passes iff the pair qualifies.
inline std::vector<Check> verify_divisor_conditions(const PicardClass& D, const PicardClass& C) {
  std::vector<Check> out;
  const auto K = PicardClass::canonical();
  const auto surface = rr::SurfaceInvariants::godeaux();
  const PicardClass E = D - K;
  out.push_back(check_equal("divisor.E_squared", "(E_j^2) = -2", -2, pairing(E, E), Provenance::paper));
  out.push_back(check_equal("divisor.E_dot_K", "(E_j, K) = 0", 0, pairing(E, K), Provenance::paper));
  out.push_back(check_equal("curve.C_squared", "C_i^2 = 1", 1, pairing(C, C), Provenance::paper));
  out.push_back(check_equal("curve.C_dot_K", "C_i numerically equivalent to K", 1, pairing(C, K), Provenance::paper));
  const auto genus = rr::adjunction_genus(numerics(C));
  out.push_back(check_equal("curve.genus", "g(C_i) = 2", 2, genus, Provenance::paper));
  out.push_back(check_equal("divisor.D_dot_C", "(D_j, C_i) = g(C_i) - 1", genus - 1, pairing(D, C), Provenance::paper));
  out.push_back(check_equal("divisor.chi", "chi(D_j) = 0", 0, rr::chi_divisor(surface, numerics(D)), Provenance::paper));
  return out;
}

}  // namespace godeaux::lattice
