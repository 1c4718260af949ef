#pragma once

// Truncated model of the completed ring of partial differential operators in
// two variables. An operator is a finite sum of alpha x1^i1 x2^i2 d1^k1 d2^k2
// (x's to the left) known modulo terms of total x-degree >= T.

#include "godeaux/exact_arith.hpp"
#include "godeaux/polynomial.hpp"

#include <algorithm>
#include <climits>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace godeaux::pdo {

/// Sentinel for -infinity in orders and slopes.
inline constexpr int kMinusInfinity = INT_MIN / 4;
/// Sentinel for +infinity (ord_M of zero).
inline constexpr int kPlusInfinity = INT_MAX / 4;

inline int add_orders(int a, int b) { return (a == kMinusInfinity || b == kMinusInfinity) ? kMinusInfinity : a + b; }

struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UndecidableOrder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// x1^i1 x2^i2 d1^k1 d2^k2.
struct Monomial {
  int i1 = 0, i2 = 0, k1 = 0, k2 = 0;

  int x_degree() const { return i1 + i2; }
  int d_degree() const { return k1 + k2; }
  /// Contribution k1+k2 - (i1+i2) of this term to the order.
  int slope() const { return d_degree() - x_degree(); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class TruncatedOperator {
 public:
  using Terms = std::map<Monomial, Rational>;

  /// Zero operator with x-adic precision T and d-degree bound. The unknown
  /// tail (x-degree >= T, d-degree <= d_bound) contributes at most d_bound - T
  /// to the order.
  TruncatedOperator(int precision, int d_bound)
      : precision_(precision), d_bound_(d_bound), frontier_(d_bound - precision) {
    if (precision <= 0) throw PrecisionExhausted("x-adic precision must be positive");
    if (d_bound < 0) throw std::invalid_argument("negative d-degree bound");
  }

  static TruncatedOperator monomial(const Monomial& m, const Rational& c, int precision, int d_bound) {
    TruncatedOperator p(precision, d_bound);
    p.add_term(m, c);
    return p;
  }

  int precision() const { return precision_; }
  int d_bound() const { return d_bound_; }
  /// Upper bound on the slope of any term hidden beyond the precision;
  /// kMinusInfinity when the operator is known exactly.
  int frontier() const { return frontier_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds a term; terms at or beyond the precision are dropped.
  TruncatedOperator& add_term(const Monomial& m, const Rational& c) {
    if (m.i1 < 0 || m.i2 < 0 || m.k1 < 0 || m.k2 < 0) throw std::invalid_argument("negative exponent in operator term");
    if (m.d_degree() > d_bound_)
      throw std::invalid_argument("term of d-degree " + std::to_string(m.d_degree()) + " exceeds bound " +
                                  std::to_string(d_bound_));
    if (c == 0) return *this;
    if (m.x_degree() >= precision_) {
      frontier_ = std::max(frontier_, m.slope());
      return *this;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  /// Largest d-degree among stored terms (0 for zero).
  int d_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.d_degree());
    return d;
  }

  /// sup of k1+k2 - (i1+i2) over stored terms; kMinusInfinity for zero.
  int max_slope() const {
    int s = kMinusInfinity;
    for (const auto& [m, c] : terms_) s = std::max(s, m.slope());
    return s;
  }

  /// Same operator with a lower precision; terms beyond it move to the tail.
  TruncatedOperator truncated(int precision) const {
    if (precision > precision_) throw std::invalid_argument("cannot raise precision by truncation");
    TruncatedOperator out(precision, d_bound_);
    out.frontier_ = frontier_;
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
  }

  /// Marks the operator as known exactly (no hidden tail).
  TruncatedOperator exact() const {
    TruncatedOperator out(*this);
    out.frontier_ = kMinusInfinity;
    return out;
  }

  TruncatedOperator with_d_bound(int d_bound) const {
    TruncatedOperator out(precision_, d_bound);
    out.frontier_ = frontier_ == kMinusInfinity ? kMinusInfinity : frontier_ + (d_bound - d_bound_);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
  }

  TruncatedOperator operator-() const {
    TruncatedOperator out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  friend TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b) {
    TruncatedOperator out(std::min(a.precision_, b.precision_), std::max(a.d_bound_, b.d_bound_));
    out.frontier_ = std::max(a.frontier_, b.frontier_);
    for (const auto& [m, c] : a.terms_) out.add_term(m, c);
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b) { return a + (-b); }

  friend TruncatedOperator operator*(const Rational& s, const TruncatedOperator& p) {
    TruncatedOperator out(p.precision_, p.d_bound_);
    out.frontier_ = p.frontier_;
    if (s == 0) return out;
    for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, s * c);
    return out;
  }

  friend TruncatedOperator operator*(const TruncatedOperator& p, const TruncatedOperator& q);

  /// Same stored terms, precision and bound.
  friend bool operator==(const TruncatedOperator& a, const TruncatedOperator& b) {
    return a.precision_ == b.precision_ && a.d_bound_ == b.d_bound_ && a.terms_ == b.terms_;
  }

 private:
  friend TruncatedOperator multiply(const TruncatedOperator&, const TruncatedOperator&);
  friend TruncatedOperator change_variables(const TruncatedOperator&, const Rational&, const Rational&,
                                            const Rational&, const Rational&, const Rational&);
  friend TruncatedOperator homogeneous_component(const TruncatedOperator&, int);

  int precision_;
  int d_bound_;
  int frontier_;
  Terms terms_;
};

/// True iff a and b have the same coefficient on every monomial of x-degree
/// below `precision`.
inline bool agree_below(const TruncatedOperator& a, const TruncatedOperator& b, int precision) {
  auto low = [precision](const TruncatedOperator& p) {
    std::map<Monomial, Rational> out;
    for (const auto& [m, c] : p.terms())
      if (m.x_degree() < precision) out.emplace(m, c);
    return out;
  };
  return low(a) == low(b);
}

inline bool agree(const TruncatedOperator& a, const TruncatedOperator& b) {
  return agree_below(a, b, std::min(a.precision(), b.precision()));
}

namespace detail {

inline BigInt falling_factorial(int n, int j) {
  BigInt r = 1;
  for (int t = 0; t < j; ++t) r *= n - t;
  return r;
}

inline BigInt binomial(int n, int j) {
  BigInt r = 1;
  for (int t = 1; t <= j; ++t) r = r * (n - j + t) / t;
  return r;
}

}  // namespace detail

/// Product by the Leibniz rule d^k f = sum_j binom(k,j) (d^j f) d^{k-j}.
/// Result precision is min(T_P, T_Q) minus the d-degree of P; the result
/// bound is d_P + d_Q. Throws PrecisionExhausted when nothing reliable remains.
inline TruncatedOperator multiply(const TruncatedOperator& p, const TruncatedOperator& q) {
  const int precision = std::min(p.precision_, q.precision_) - p.d_degree();
  if (precision <= 0)
    throw PrecisionExhausted("product precision " + std::to_string(precision) + " after debiting d-degree " +
                             std::to_string(p.d_degree()));
  TruncatedOperator out(precision, p.d_bound_ + q.d_bound_);
  // Hidden parts: P_tail * Q, P * Q_tail. Slopes add under multiplication.
  const int p_full = std::max(p.max_slope(), p.frontier_);
  const int q_full = std::max(q.max_slope(), q.frontier_);
  out.frontier_ = std::max(add_orders(p.frontier_, q_full), add_orders(p_full, q.frontier_));

  for (const auto& [a, ca] : p.terms_)
    for (const auto& [b, cb] : q.terms_) {
      const Rational base = ca * cb;
      for (int j1 = 0; j1 <= std::min(a.k1, b.i1); ++j1) {
        const BigInt f1 = detail::binomial(a.k1, j1) * detail::falling_factorial(b.i1, j1);
        for (int j2 = 0; j2 <= std::min(a.k2, b.i2); ++j2) {
          const BigInt f2 = detail::binomial(a.k2, j2) * detail::falling_factorial(b.i2, j2);
          const Monomial m{a.i1 + b.i1 - j1, a.i2 + b.i2 - j2, a.k1 + b.k1 - j1, a.k2 + b.k2 - j2};
          out.add_term(m, base * Rational(f1 * f2));
        }
      }
    }
  return out;
}

inline TruncatedOperator operator*(const TruncatedOperator& p, const TruncatedOperator& q) { return multiply(p, q); }

inline TruncatedOperator commutator(const TruncatedOperator& p, const TruncatedOperator& q) { return p * q - q * p; }

/// Coefficient a_k(x) of d1^k1 d2^k2, as a polynomial in (x1, x2).
inline SparsePolynomial<Rational> coefficient_of(const TruncatedOperator& p, int k1, int k2) {
  SparsePolynomial<Rational> out(2);
  for (const auto& [m, c] : p.terms())
    if (m.k1 == k1 && m.k2 == k2) out.add_term({m.i1, m.i2}, c);
  return out;
}

/// Largest n with a in (x1, x2)^n; kPlusInfinity for zero.
inline int ord_M(const SparsePolynomial<Rational>& a) {
  if (a.num_vars() != 2) throw std::invalid_argument("ord_M expects a polynomial in x1, x2");
  int best = kPlusInfinity;
  for (const auto& [e, c] : a.terms()) best = std::min(best, e[0] + e[1]);
  return best;
}

struct BoldOrder {
  enum class Kind { finite, minus_infinity, undecidable };
  Kind kind;
  int value = 0;

  bool is_finite() const { return kind == Kind::finite; }
  bool decidable() const { return kind != Kind::undecidable; }
  /// Numeric value with -infinity as kMinusInfinity; throws if undecidable.
  int as_int() const {
    if (kind == Kind::undecidable) throw UndecidableOrder("order not decidable at this precision");
    return kind == Kind::minus_infinity ? kMinusInfinity : value;
  }
  friend bool operator==(const BoldOrder&, const BoldOrder&) = default;
};

/// sup over k of k1+k2 - ord_M(a_k). A zero operator (zero within precision)
/// has order -infinity; otherwise the value is undecidable when the hidden
/// tail could exceed the stored supremum.
inline BoldOrder bold_ord(const TruncatedOperator& p) {
  if (p.is_zero()) return {BoldOrder::Kind::minus_infinity, 0};
  const int s = p.max_slope();
  if (s < p.frontier()) return {BoldOrder::Kind::undecidable, s};
  return {BoldOrder::Kind::finite, s};
}

/// P_m: the terms with (i1+i2) - (k1+k2) = m.
inline TruncatedOperator homogeneous_component(const TruncatedOperator& p, int m) {
  TruncatedOperator out(p.precision(), p.d_bound());
  out.frontier_ = (-m <= p.frontier()) ? -m : kMinusInfinity;
  for (const auto& [mono, c] : p.terms())
    if (-mono.slope() == m) out.terms_.emplace(mono, c);
  return out;
}

/// All nonzero homogeneous components keyed by grade.
inline std::map<int, TruncatedOperator> homogeneous_components(const TruncatedOperator& p) {
  std::map<int, TruncatedOperator> out;
  for (const auto& [mono, c] : p.terms()) {
    const int g = -mono.slope();
    if (!out.contains(g)) out.emplace(g, homogeneous_component(p, g));
  }
  return out;
}

/// sigma(P) = P_{-ord(P)}; zero for the zero operator.
inline TruncatedOperator symbol(const TruncatedOperator& p) {
  const auto d = bold_ord(p);
  if (!d.decidable()) throw UndecidableOrder("symbol needs a decidable order");
  if (d.kind == BoldOrder::Kind::minus_infinity) return TruncatedOperator(p.precision(), p.d_bound()).exact();
  return homogeneous_component(p, -d.value);
}

inline bool is_homogeneous(const TruncatedOperator& p) { return agree(symbol(p), p); }

// ---------------------------------------------------------------------------
// Gamma-order: P = sum_{s<=l} p_s d2^s with p_l of d1-order k.

struct GammaOrder {
  int k;
  int l;
  friend bool operator==(const GammaOrder&, const GammaOrder&) = default;
  friend GammaOrder operator+(GammaOrder a, GammaOrder b) { return {a.k + b.k, a.l + b.l}; }
};

/// Top d2-degree of the stored terms; nullopt for zero.
inline std::optional<int> ord_2(const TruncatedOperator& p) {
  if (p.is_zero()) return std::nullopt;
  int l = 0;
  for (const auto& [m, c] : p.terms()) l = std::max(l, m.k2);
  return l;
}

/// Highest term p_l as an operator free of d2.
inline TruncatedOperator HT_2(const TruncatedOperator& p) {
  TruncatedOperator out(p.precision(), p.d_bound());
  const auto l = ord_2(p);
  if (!l) return out;
  for (const auto& [m, c] : p.terms())
    if (m.k2 == *l) out.add_term({m.i1, m.i2, m.k1, 0}, c);
  return out;
}

inline std::optional<GammaOrder> ord_gamma(const TruncatedOperator& p) {
  const auto l = ord_2(p);
  if (!l) return std::nullopt;
  int k = 0;
  for (const auto& [m, c] : p.terms())
    if (m.k2 == *l) k = std::max(k, m.k1);
  return GammaOrder{k, *l};
}

/// The coefficient function of d1^k d2^l in P equals 1.
inline bool is_monic(const TruncatedOperator& p) {
  const auto g = ord_gamma(p);
  if (!g) return false;
  const auto lead = coefficient_of(p, g->k, g->l);
  return lead == SparsePolynomial<Rational>::monomial({0, 0}, Rational(1));
}

/// Every order attached to P at once.
struct OrderValue {
  std::optional<GammaOrder> gamma;
  BoldOrder bold;
  std::optional<int> ord2;
  std::map<std::pair<int, int>, int> ordM_profile;  // (k1, k2) -> ord_M(a_k)
};

inline OrderValue order_profile(const TruncatedOperator& p) {
  OrderValue v{ord_gamma(p), bold_ord(p), ord_2(p), {}};
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = v.ordM_profile.try_emplace({m.k1, m.k2}, m.x_degree());
    if (!inserted) it->second = std::min(it->second, m.x_degree());
  }
  return v;
}

/// ord_M(q_ij) >= i + j - m for every stored term.
inline bool a1_check(const TruncatedOperator& p, int m) {
  return std::all_of(p.terms().begin(), p.terms().end(), [m](const auto& t) { return t.first.slope() <= m; });
}

/// P satisfies A_1(k + l) where (k, l) is its Gamma-order.
inline bool satisfies_a1(const TruncatedOperator& p) {
  const auto g = ord_gamma(p);
  return g && a1_check(p, g->k + g->l);
}

/// Monic P, Q with ord_Gamma(P) = (0, k), k >= 1, and ord_Gamma(Q) = (1, l).
inline bool is_quasi_elliptic_pair(const TruncatedOperator& p, const TruncatedOperator& q) {
  const auto gp = ord_gamma(p), gq = ord_gamma(q);
  return gp && gq && gp->k == 0 && gp->l >= 1 && gq->k == 1 && is_monic(p) && is_monic(q);
}

/// Quasi-elliptic pair satisfying A_1, hence ord(P) = k and ord(Q) = 1 + l.
inline bool is_one_quasi_elliptic_pair(const TruncatedOperator& p, const TruncatedOperator& q) {
  if (!is_quasi_elliptic_pair(p, q) || !satisfies_a1(p) || !satisfies_a1(q)) return false;
  const auto gp = *ord_gamma(p), gq = *ord_gamma(q);
  const auto op = bold_ord(p), oq = bold_ord(q);
  return op.is_finite() && oq.is_finite() && op.value == gp.l && oq.value == 1 + gq.l;
}

/// P = d2^k + sum_{s<=k-2} p_s d2^s and Q = d1 d2^l + sum_{s<=l-1} q_s d2^s.
inline bool is_normalized_pair(const TruncatedOperator& p, const TruncatedOperator& q) {
  if (!is_quasi_elliptic_pair(p, q)) return false;
  const int k = ord_gamma(p)->l, l = ord_gamma(q)->l;
  for (const auto& [m, c] : p.terms()) {
    if (m.k2 == k && !(m == Monomial{0, 0, 0, k} && c == 1)) return false;
    if (m.k2 == k - 1) return false;
  }
  for (const auto& [m, c] : q.terms())
    if (m.k2 == l && !(m == Monomial{0, 0, 1, l} && c == 1)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Linear changes of variables.

/// Applies d2 -> a d2 + c d1 + b, d1 -> e d1 + d, x2 -> a^{-1} x2 and
/// x1 -> e^{-1} x1 - c (a e)^{-1} x2 generator-wise. The x1 image is the one
/// that keeps [d2', x1'] = 0; it is e^{-1} x1 - c x2 whenever a e = 1.
inline TruncatedOperator change_variables(const TruncatedOperator& p, const Rational& a, const Rational& b,
                                          const Rational& c, const Rational& d, const Rational& e) {
  if (a == 0 || e == 0) throw std::invalid_argument("linear change needs nonzero a and e");
  using Poly = SparsePolynomial<Rational>;
  const Poly x1_image = Poly::monomial({1, 0}, 1 / e) + Poly::monomial({0, 1}, -c / (a * e));
  const Poly x2_image = Poly::monomial({0, 1}, 1 / a);
  const Poly d1_image = Poly::monomial({1, 0}, e) + Poly::monomial({0, 0}, d);
  const Poly d2_image = Poly::monomial({0, 1}, a) + Poly::monomial({1, 0}, c) + Poly::monomial({0, 0}, b);

  auto pow = [](const Poly& base, int n) {
    Poly acc = Poly::monomial({0, 0}, Rational(1));
    for (int i = 0; i < n; ++i) acc = acc * base;
    return acc;
  };

  TruncatedOperator out(p.precision(), p.d_bound());
  out.frontier_ = p.frontier_;
  for (const auto& [m, coeff] : p.terms()) {
    const Poly xs = pow(x1_image, m.i1) * pow(x2_image, m.i2);
    const Poly ds = pow(d1_image, m.k1) * pow(d2_image, m.k2);
    for (const auto& [ex, cx] : xs.terms())
      for (const auto& [ed, cd] : ds.terms()) out.add_term({ex[0], ex[1], ed[0], ed[1]}, coeff * cx * cd);
  }
  return out;
}

/// d2 -> d2 + c d1 + b, d1 -> d1 + d, x1 -> x1 - c x2, x2 -> x2.
inline TruncatedOperator special_change(const TruncatedOperator& p, const Rational& b, const Rational& c,
                                        const Rational& d) {
  return change_variables(p, 1, b, c, d, 1);
}

/// Parameters (b', c', d') of the special change inverting (b, c, d).
struct SpecialChange {
  Rational b, c, d;
  SpecialChange inverse() const { return {c * d - b, -c, -d}; }
};

inline TruncatedOperator apply(const SpecialChange& s, const TruncatedOperator& p) { return special_change(p, s.b, s.c, s.d); }

// ---------------------------------------------------------------------------
// Spectral module F = D / (x1 D + x2 D) = k[d1, d2] with the right action.

/// Class of f in F times P: multiply f (a polynomial in d1, d2) by P on the
/// right and discard every term with a positive power of x.
inline SparsePolynomial<Rational> spectral_module_action(const TruncatedOperator& p,
                                                         const SparsePolynomial<Rational>& f) {
  if (f.num_vars() != 2) throw std::invalid_argument("spectral module classes are polynomials in d1, d2");
  TruncatedOperator lifted(p.precision(), std::max(p.d_bound(), f.total_degree()));
  for (const auto& [e, c] : f.terms()) lifted.add_term({0, 0, e[0], e[1]}, c);
  const auto prod = multiply(lifted.exact(), p);
  SparsePolynomial<Rational> out(2);
  for (const auto& [m, c] : prod.terms())
    if (m.x_degree() == 0) out.add_term({m.k1, m.k2}, c);
  return out;
}

inline SparsePolynomial<Rational> spectral_module_action(const TruncatedOperator& p, int p1, int p2) {
  return spectral_module_action(p, SparsePolynomial<Rational>::monomial({p1, p2}, Rational(1)));
}

/// GCD of a finite list of orders (the rank bookkeeping behind N_B).
inline int order_gcd(const std::vector<int>& orders) {
  int g = 0;
  for (int o : orders) g = std::gcd(g, o);
  return g;
}

}  // namespace godeaux::pdo
