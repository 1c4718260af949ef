#pragma once

// Numerical surface invariants: Riemann-Roch, adjunction, Noether's formula,
// free quotients, and the Hilbert-polynomial conditions on O(D + nC).

#include "godeaux/exact_arith.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace godeaux::rr {

/// Invariants of a smooth projective surface. The constructor enforces
/// Noether's formula 12 chi = K^2 + e and chi = 1 - q + p_g; b2 is derived.
class SurfaceInvariants {
 public:
  SurfaceInvariants(std::int64_t chi, std::int64_t K2, std::int64_t e, std::int64_t q, std::int64_t pg)
      : chi_(chi), K2_(K2), e_(e), q_(q), pg_(pg), b2_(e - 2 + 4 * q) {
    if (12 * chi != K2 + e)
      throw std::invalid_argument("Noether's formula fails: 12*" + std::to_string(chi) + " != " + std::to_string(K2) +
                                  " + " + std::to_string(e));
    if (chi != 1 - q + pg) throw std::invalid_argument("chi(O) != 1 - q + p_g");
    if (q < 0 || pg < 0) throw std::invalid_argument("negative irregularity or geometric genus");
  }

  static SurfaceInvariants godeaux() { return {1, 1, 11, 0, 0}; }
  static SurfaceInvariants smooth_quintic() { return {5, 5, 55, 0, 4}; }
  static SurfaceInvariants projective_plane() { return {1, 9, 3, 0, 0}; }

  std::int64_t chi() const { return chi_; }
  std::int64_t K2() const { return K2_; }
  std::int64_t euler_number() const { return e_; }
  std::int64_t irregularity() const { return q_; }
  std::int64_t geometric_genus() const { return pg_; }
  std::int64_t b2() const { return b2_; }

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;

 private:
  std::int64_t chi_, K2_, e_, q_, pg_, b2_;
};

/// Numerical class of a divisor: D^2 and D.K. D.K = D^2 (mod 2) on any
/// smooth surface (Wu's formula), so the constructor rejects other pairs.
struct NumericalDivisor {
  std::int64_t self_int;
  std::int64_t dot_K;

  NumericalDivisor(std::int64_t d2, std::int64_t dk) : self_int(d2), dot_K(dk) {
    if ((d2 - dk) % 2 != 0)
      throw std::invalid_argument("parity violation: D^2 = " + std::to_string(d2) + ", D.K = " + std::to_string(dk));
  }

  friend bool operator==(const NumericalDivisor&, const NumericalDivisor&) = default;
};

/// Numerics of D + m C given D.C.
inline NumericalDivisor combine(const NumericalDivisor& D, const NumericalDivisor& C, std::int64_t d_dot_c,
                                std::int64_t m) {
  return {D.self_int + 2 * m * d_dot_c + m * m * C.self_int, D.dot_K + m * C.dot_K};
}

/// chi(O(D)) = chi(O) + (D^2 - D.K)/2.
inline std::int64_t chi_divisor(const SurfaceInvariants& s, const NumericalDivisor& D) {
  return s.chi() + (D.self_int - D.dot_K) / 2;
}

/// Arithmetic genus 1 + (D^2 + D.K)/2.
inline std::int64_t adjunction_genus(const NumericalDivisor& D) { return 1 + (D.self_int + D.dot_K) / 2; }

inline std::int64_t noether_euler(std::int64_t chi, std::int64_t K2) { return 12 * chi - K2; }

/// Invariants of the quotient by a free action of a group of order `degree`.
/// chi, K^2 and e divide by the degree; q defaults to the cover's and p_g is
/// then determined by chi = 1 - q + p_g unless given.
inline SurfaceInvariants quotient_invariants(const SurfaceInvariants& cover, std::int64_t degree,
                                             std::optional<std::int64_t> q = std::nullopt,
                                             std::optional<std::int64_t> pg = std::nullopt) {
  if (degree < 1) throw std::invalid_argument("group order must be positive");
  for (auto v : {cover.chi(), cover.K2(), cover.euler_number()})
    if (v % degree != 0)
      throw std::invalid_argument("invariant " + std::to_string(v) + " not divisible by " + std::to_string(degree) +
                                  ": the action cannot be free");
  const auto chi = cover.chi() / degree;
  const auto qq = q.value_or(cover.irregularity());
  const auto gg = pg.value_or(chi - 1 + qq);
  return {chi, cover.K2() / degree, cover.euler_number() / degree, qq, gg};
}

/// chi(O(D + (n+1)C)) == (n+1)(n+2)/2 for n = 0..n_max, i.e. the Hilbert
/// condition for F = O(D + C) with d = 1.
inline bool prespectral_hilbert_check(const SurfaceInvariants& s, const NumericalDivisor& D,
                                      const NumericalDivisor& C, std::int64_t d_dot_c, int n_max) {
  for (std::int64_t n = 0; n <= n_max; ++n)
    if (chi_divisor(s, combine(D, C, d_dot_c, n + 1)) != (n + 1) * (n + 2) / 2) return false;
  return true;
}

/// Excellent-sheaf numerics for F = O(D + C): chi(F(-C)) = 0 and
/// chi(F((n-1)C)) = n(n+1)/2 for n = 0..n_max.
inline bool excellent_chi_check(const SurfaceInvariants& s, const NumericalDivisor& D, const NumericalDivisor& C,
                                std::int64_t d_dot_c, int n_max) {
  if (chi_divisor(s, D) != 0) return false;
  for (std::int64_t n = 0; n <= n_max; ++n)
    if (chi_divisor(s, combine(D, C, d_dot_c, n)) != n * (n + 1) / 2) return false;
  return true;
}

struct QuadraticFit {
  std::array<Rational, 3> coeffs;  // c0 + c1 m + c2 m^2
  bool reproduces_all = false;     // the fit matches chi(O(mC)) for every m <= m_max
};

/// Quadratic through chi(O(mC)) at m = 1, 2, 3 (Newton differences), checked
/// against every m up to m_max.
inline QuadraticFit fit_chi_growth(const SurfaceInvariants& s, const NumericalDivisor& C, int m_max) {
  auto chi_m = [&](std::int64_t m) { return Rational(chi_divisor(s, NumericalDivisor{m * m * C.self_int, m * C.dot_K})); };
  const Rational y1 = chi_m(1), y2 = chi_m(2), y3 = chi_m(3);
  const Rational c2 = (y3 - 2 * y2 + y1) / 2;
  const Rational c1 = (y2 - y1) - 3 * c2;
  const Rational c0 = y1 - c1 - c2;
  QuadraticFit fit{{c0, c1, c2}, true};
  for (std::int64_t m = 1; m <= m_max; ++m)
    if (c0 + c1 * m + c2 * m * m != chi_m(m)) fit.reproduces_all = false;
  return fit;
}

/// Leading coefficient of chi(O(mC)) equals 1/2 (rank-one growth m^2/2).
inline bool growth_check(const SurfaceInvariants& s, const NumericalDivisor& C, int m_max) {
  const auto fit = fit_chi_growth(s, C, m_max);
  return fit.reproduces_all && fit.coeffs[2] == Rational(1, 2);
}

/// chi of a degree-d line bundle on a smooth curve of genus g.
inline std::int64_t chi_curve_sheaf(std::int64_t degree, std::int64_t genus) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  return degree - genus + 1;
}

/// h^0 of a degree-d line bundle when d > 2g - 2 (h^1 vanishes).
inline std::int64_t h0_nonspecial(std::int64_t degree, std::int64_t genus) {
  if (degree <= 2 * genus - 2) throw std::invalid_argument("degree not above the canonical degree");
  return chi_curve_sheaf(degree, genus);
}

}  // namespace godeaux::rr
