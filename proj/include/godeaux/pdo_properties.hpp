#pragma once

// Seeded random operators and the randomized property suite for the
// truncated operator algebra. Every trial draws from its own generator seeded
// by (seed, property, trial), so results do not depend on scheduling.

#include "godeaux/pdo_algebra.hpp"
#include "godeaux/pdo_text.hpp"

#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace godeaux::pdo {

struct PropertyConfig {
  std::uint64_t seed = 42;
  int trials = 500;
  int precision = 12;
  int d_bound = 6;
};

class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint32_t stream, std::uint32_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream, trial};
    engine_.seed(seq);
  }

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    if (hi < lo) return lo;
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(int percent = 50) { return uniform(0, 99) < percent; }

  /// Nonzero rational: mostly small integers, sometimes p/2 or p/3.
  Rational nonzero_rational() {
    int num = uniform(1, 4) * (coin() ? 1 : -1);
    if (coin(75)) return Rational(num);
    return Rational(num, uniform(2, 3));
  }
  Rational rational_or_zero(int zero_percent) { return coin(zero_percent) ? Rational(0) : nonzero_rational(); }

 private:
  std::mt19937_64 engine_;  // raw engine output only: std distributions differ between standard libraries
};

struct OperatorShape {
  int max_terms = 4;
  int max_x = 3;
  int max_d = 2;
};

namespace detail {

inline std::pair<int, int> split(TrialRng& rng, int total) {
  const int a = rng.uniform(0, total);
  return {a, total - a};
}

}  // namespace detail

/// Random operator whose terms have x-degree <= max_x and d-degree <= max_d.
inline TruncatedOperator random_operator(TrialRng& rng, int precision, int d_bound, const OperatorShape& s = {}) {
  TruncatedOperator p(precision, d_bound);
  const int n = rng.uniform(1, s.max_terms);
  for (int t = 0; t < n; ++t) {
    auto [i1, i2] = detail::split(rng, rng.uniform(0, s.max_x));
    auto [k1, k2] = detail::split(rng, rng.uniform(0, std::min(s.max_d, d_bound)));
    p.add_term({i1, i2, k1, k2}, rng.nonzero_rational());
  }
  if (p.is_zero()) p.add_term({0, 0, 0, 0}, 1);
  return p;
}

/// Random operator satisfying A1(m): every term has x-degree >= d-degree - m.
inline TruncatedOperator random_a1_operator(TrialRng& rng, int m, int precision, int d_bound,
                                            const OperatorShape& s = {}) {
  TruncatedOperator p(precision, d_bound);
  const int n = rng.uniform(1, s.max_terms);
  for (int t = 0; t < n; ++t) {
    const int dd = rng.uniform(0, std::min(s.max_d, d_bound));
    const int xd = std::max(0, dd - m) + rng.uniform(0, 2);
    auto [i1, i2] = detail::split(rng, xd);
    auto [k1, k2] = detail::split(rng, dd);
    p.add_term({i1, i2, k1, k2}, rng.nonzero_rational());
  }
  return p;
}

/// Monic operator of Gamma-order g: d1^k d2^l plus random lower terms
/// (smaller d2-degree, or the same d2-degree with smaller d1-degree).
inline TruncatedOperator random_gamma_operator(TrialRng& rng, GammaOrder g, int precision, int d_bound,
                                               int extra_terms = 3) {
  TruncatedOperator p(precision, d_bound);
  p.add_term({0, 0, g.k, g.l}, 1);
  const int n = rng.uniform(0, extra_terms);
  for (int t = 0; t < n; ++t) {
    int k1, k2;
    if (g.k > 0 && rng.coin(30)) {
      k2 = g.l;
      k1 = rng.uniform(0, g.k - 1);
    } else if (g.l > 0) {
      k2 = rng.uniform(0, g.l - 1);
      k1 = rng.uniform(0, std::min(2, d_bound - k2));
    } else {
      continue;
    }
    auto [i1, i2] = detail::split(rng, rng.uniform(0, 2));
    p.add_term({i1, i2, k1, k2}, rng.nonzero_rational());
  }
  return p;
}

struct OperatorPair {
  TruncatedOperator p, q;
};

/// Random 1-quasi-elliptic pair in normalized form:
/// P = d2^k + sum_{s<=k-2} p_s d2^s, Q = d1 d2^l + sum_{s<=l-1} q_s d2^s,
/// with lower terms respecting A1(k) and A1(1 + l).
inline OperatorPair random_normalized_pair(TrialRng& rng, int precision, int d_bound) {
  const int k = rng.uniform(1, std::min(3, d_bound));
  const int l = rng.uniform(1, std::min(2, d_bound - 1));
  auto lower = [&](TruncatedOperator& op, int top_s, int order) {
    const int n = rng.uniform(0, 3);
    for (int t = 0; t < n && top_s >= 0; ++t) {
      const int s = rng.uniform(0, top_s);
      const int k1 = rng.uniform(0, std::min(2, d_bound - s));
      const int xd = std::max(0, k1 + s - order) + rng.uniform(0, 2);
      auto [i1, i2] = detail::split(rng, xd);
      op.add_term({i1, i2, k1, s}, rng.nonzero_rational());
    }
  };
  TruncatedOperator p(precision, d_bound), q(precision, d_bound);
  p.add_term({0, 0, 0, k}, 1);
  lower(p, k - 2, k);
  q.add_term({0, 0, 1, l}, 1);
  lower(q, l - 1, 1 + l);
  return {p, q};
}

/// delta_N = sum_{n<=N} (-x1)^n / n! d1^n. Its product with x1 * R leaves
/// only terms of x-degree > N, so for T <= 2N + 1 it is zero within precision.
inline TruncatedOperator truncated_delta(int n_max, int precision, int d_bound) {
  TruncatedOperator p(precision, d_bound);
  BigInt fact = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) fact *= n;
    p.add_term({n, 0, n, 0}, Rational(n % 2 == 0 ? 1 : -1) / Rational(fact));
  }
  return p;
}

// ---------------------------------------------------------------------------

enum class TrialOutcome { pass, fail, undecidable };

struct PropertyResult {
  std::string name;
  int trials = 0;
  int passed = 0;
  int failed = 0;
  int undecidable = 0;
  std::map<std::string, int> counters;  // branch coverage and similar tallies
  std::string first_failure;
  bool required_counters_met = true;

  bool ok() const { return failed == 0 && passed > 0 && required_counters_met; }
  std::string summary() const {
    std::string s = std::to_string(passed) + "/" + std::to_string(trials) + " pass, " + std::to_string(failed) +
                    " fail, " + std::to_string(undecidable) + " undecidable";
    for (const auto& [k, v] : counters) s += ", " + k + "=" + std::to_string(v);
    return s;
  }
};

struct TrialContext {
  TrialRng& rng;
  const PropertyConfig& cfg;
  int trial;
  std::map<std::string, int>& counters;
  std::string& note;  // set on failure
};

using TrialFn = std::function<TrialOutcome(TrialContext&)>;

struct PropertySpec {
  std::string name;
  std::uint32_t stream;
  TrialFn fn;
  std::vector<std::string> required_counters;  // each must end up positive
};

inline PropertyResult run_property(const PropertySpec& spec, const PropertyConfig& cfg) {
  PropertyResult r;
  r.name = spec.name;
  for (int t = 0; t < cfg.trials; ++t) {
    TrialRng rng(cfg.seed, spec.stream, static_cast<std::uint32_t>(t));
    std::string note;
    TrialContext ctx{rng, cfg, t, r.counters, note};
    TrialOutcome o;
    try {
      o = spec.fn(ctx);
    } catch (const UndecidableOrder&) {
      o = TrialOutcome::undecidable;
    } catch (const PrecisionExhausted&) {
      o = TrialOutcome::undecidable;
      ++r.counters["budget_exhausted"];
    }
    ++r.trials;
    switch (o) {
      case TrialOutcome::pass: ++r.passed; break;
      case TrialOutcome::undecidable: ++r.undecidable; break;
      case TrialOutcome::fail:
        ++r.failed;
        if (r.first_failure.empty()) r.first_failure = "trial " + std::to_string(t) + ": " + note;
        break;
    }
  }
  for (const auto& c : spec.required_counters)
    if (r.counters[c] == 0) r.required_counters_met = false;
  return r;
}

namespace properties {

inline TrialOutcome verdict(bool ok, TrialContext& ctx, const std::string& what) {
  if (!ok) ctx.note = what;
  return ok ? TrialOutcome::pass : TrialOutcome::fail;
}

inline TrialOutcome associativity(TrialContext& c) {
  const int T = c.cfg.precision, d = c.cfg.d_bound;
  const auto p = random_operator(c.rng, T, d), q = random_operator(c.rng, T, d), r = random_operator(c.rng, T, d);
  const auto left = (p * q) * r, right = p * (q * r);
  return verdict(agree(left, right), c, "(PQ)R = " + to_string(left) + " vs P(QR) = " + to_string(right));
}

inline TrialOutcome ord_subadditivity(TrialContext& c) {
  const int T = c.cfg.precision, d = c.cfg.d_bound;
  TruncatedOperator p(T, d), q(T, d);
  const bool constructed = c.trial % 4 == 3;
  if (constructed) {
    if (T > 2 * d + 1) {
      ++c.counters["zero_divisor_unconstructible"];
      return TrialOutcome::undecidable;
    }
    p = truncated_delta(d, T, d);
    q = TruncatedOperator::monomial({1, 0, 0, 0}, 1, T, d) * random_operator(c.rng, T, d);
  } else {
    p = random_operator(c.rng, T, d);
    q = random_operator(c.rng, T, d);
  }
  const auto pq = p * q;
  const auto op = bold_ord(p), oq = bold_ord(q), opq = bold_ord(pq);
  if (!op.decidable() || !oq.decidable() || !opq.decidable()) return TrialOutcome::undecidable;
  const int sum = add_orders(op.as_int(), oq.as_int());
  if (opq.as_int() > sum) return verdict(false, c, "ord(PQ) exceeds ord(P) + ord(Q)");
  const bool symbols_multiply_to_zero = (symbol(p) * symbol(q)).is_zero();
  if (symbols_multiply_to_zero) {
    ++c.counters["strict_branch"];
    return verdict(opq.as_int() < sum, c, "sigma(P)sigma(Q) = 0 but ord(PQ) = ord(P) + ord(Q)");
  }
  ++c.counters["equality_branch"];
  return verdict(opq.as_int() == sum, c, "sigma(P)sigma(Q) != 0 but ord(PQ) < ord(P) + ord(Q)");
}

inline TrialOutcome symbol_multiplicativity(TrialContext& c) {
  const int T = c.cfg.precision, d = c.cfg.d_bound;
  const auto p = random_operator(c.rng, T, d), q = random_operator(c.rng, T, d);
  const auto s = symbol(p) * symbol(q);
  if (s.is_zero()) {
    ++c.counters["vacuous"];
    return TrialOutcome::undecidable;
  }
  const auto spq = symbol(p * q);
  return verdict(agree(spq, s), c, "sigma(PQ) = " + to_string(spq) + " vs " + to_string(s));
}

inline TrialOutcome component_reassembly(TrialContext& c) {
  const auto p = random_operator(c.rng, c.cfg.precision, c.cfg.d_bound, {6, 4, 3});
  TruncatedOperator sum(c.cfg.precision, c.cfg.d_bound);
  for (const auto& [m, comp] : homogeneous_components(p)) sum = sum + comp;
  return verdict(agree(sum, p), c, "components do not reassemble " + to_string(p));
}

inline TrialOutcome gamma_additivity(TrialContext& c) {
  const int T = c.cfg.precision, d = c.cfg.d_bound;
  const GammaOrder g1{c.rng.uniform(0, 2), c.rng.uniform(0, 2)}, g2{c.rng.uniform(0, 2), c.rng.uniform(0, 2)};
  const auto p1 = random_gamma_operator(c.rng, g1, T, d), p2 = random_gamma_operator(c.rng, g2, T, d);
  const auto prod = p1 * p2;
  const auto g = ord_gamma(prod);
  if (!g || !(*g == g1 + g2)) return verdict(false, c, "ord_Gamma not additive for " + to_string(prod));
  if (ord_2(prod) != *ord_2(p1) + *ord_2(p2)) return verdict(false, c, "ord_2 not additive");
  if (!is_monic(prod)) return verdict(false, c, "product of monic operators not monic");
  const auto ht = HT_2(p1) * HT_2(p2);
  return verdict(agree(HT_2(prod), ht), c, "HT_2(P1 P2) = " + to_string(HT_2(prod)) + " vs " + to_string(ht));
}

inline TrialOutcome a1_closure(TrialContext& c) {
  const int T = c.cfg.precision, d = c.cfg.d_bound;
  const int m1 = c.rng.uniform(0, 2), m2 = c.rng.uniform(0, 2);
  const auto p = random_a1_operator(c.rng, m1, T, d), q = random_a1_operator(c.rng, m2, T, d);
  if (!a1_check(p, m1) || !a1_check(q, m2)) return verdict(false, c, "generator broke A1");
  return verdict(a1_check(p * q, m1 + m2), c, "product leaves A1(m + m')");
}

inline SpecialChange random_special_change(TrialRng& rng) {
  return {rng.rational_or_zero(40), rng.rational_or_zero(40), rng.rational_or_zero(40)};
}

/// The pair stays normalized after a special change.
inline TrialOutcome normalized_preservation(TrialContext& c) {
  const auto [p, q] = random_normalized_pair(c.rng, c.cfg.precision, c.cfg.d_bound);
  if (!is_normalized_pair(p, q)) return verdict(false, c, "generator produced a non-normalized pair");
  const auto phi = random_special_change(c.rng);
  const auto pp = apply(phi, p), qq = apply(phi, q);
  return verdict(is_normalized_pair(pp, qq), c,
                 "b=" + phi.b.str() + " c=" + phi.c.str() + " d=" + phi.d.str() + ": P' = " + to_string(pp) +
                     ", Q' = " + to_string(qq));
}

/// What a special change actually does to a normalized pair: the pair stays
/// 1-quasi-elliptic, P' acquires exactly k (c d1 + b) d2^{k-1}, the leading
/// coefficient of Q' becomes d1 + d, and the inverse change restores both.
inline TrialOutcome special_change_characterization(TrialContext& c) {
  const auto [p, q] = random_normalized_pair(c.rng, c.cfg.precision, c.cfg.d_bound);
  const auto phi = random_special_change(c.rng);
  const auto pp = apply(phi, p), qq = apply(phi, q);
  if (!is_one_quasi_elliptic_pair(pp, qq)) return verdict(false, c, "quasi-ellipticity lost");
  const int k = ord_gamma(p)->l, l = ord_gamma(q)->l;
  TruncatedOperator expected_p(pp.precision(), pp.d_bound()), got_p(pp.precision(), pp.d_bound());
  expected_p.add_term({0, 0, 1, k - 1}, k * phi.c).add_term({0, 0, 0, k - 1}, k * phi.b);
  TruncatedOperator expected_q(qq.precision(), qq.d_bound()), got_q(qq.precision(), qq.d_bound());
  expected_q.add_term({0, 0, 1, l}, 1).add_term({0, 0, 0, l}, phi.d);
  for (const auto& [m, coef] : pp.terms())
    if (m.k2 == k - 1) got_p.add_term(m, coef);
  for (const auto& [m, coef] : qq.terms())
    if (m.k2 == l) got_q.add_term(m, coef);
  if (!(got_p == expected_p)) return verdict(false, c, "d2^{k-1} part of P' is " + to_string(got_p));
  if (!(got_q == expected_q)) return verdict(false, c, "d2^l part of Q' is " + to_string(got_q));
  const auto inv = phi.inverse();
  return verdict(apply(inv, pp) == p && apply(inv, qq) == q, c, "inverse change does not restore the pair");
}

inline TrialOutcome precision_soundness(TrialContext& c) {
  const int T = c.cfg.precision, d = c.cfg.d_bound;
  const OperatorShape wide{5, T + 2, 3};
  const auto p_hi = random_operator(c.rng, 2 * T, d, wide), q_hi = random_operator(c.rng, 2 * T, d, wide);
  const auto low = p_hi.truncated(T) * q_hi.truncated(T);
  const auto high = p_hi * q_hi;
  return verdict(agree_below(low, high, low.precision()), c, "budget " + std::to_string(T) + " product disagrees");
}

inline TrialOutcome change_homomorphism(TrialContext& c) {
  const int T = c.cfg.precision, d = c.cfg.d_bound;
  const Rational a = c.rng.nonzero_rational(), e = c.rng.nonzero_rational();
  const Rational b = c.rng.rational_or_zero(30), cc = c.rng.rational_or_zero(30), dd = c.rng.rational_or_zero(30);
  auto phi = [&](const TruncatedOperator& x) { return change_variables(x, a, b, cc, dd, e); };
  const auto p = random_operator(c.rng, T, d), q = random_operator(c.rng, T, d);
  if (!agree(phi(p * q), phi(p) * phi(q))) return verdict(false, c, "phi(PQ) != phi(P) phi(Q)");

  auto gen = [&](Monomial m) { return phi(TruncatedOperator::monomial(m, 1, T, d)); };
  const TruncatedOperator x[2] = {gen({1, 0, 0, 0}), gen({0, 1, 0, 0})};
  const TruncatedOperator dv[2] = {gen({0, 0, 1, 0}), gen({0, 0, 0, 1})};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      TruncatedOperator delta(T, d);
      if (i == j) delta.add_term({}, 1);
      if (!agree(commutator(dv[i], x[j]), delta)) return verdict(false, c, "[d_i', x_j'] != delta_ij");
    }
  const TruncatedOperator zero(T, d);
  return verdict(agree(commutator(x[0], x[1]), zero) && agree(commutator(dv[0], dv[1]), zero), c,
                 "images of commuting generators do not commute");
}

inline TrialOutcome spectral_torsion_free(TrialContext& c) {
  const auto [p, q] = random_normalized_pair(c.rng, c.cfg.precision, c.cfg.d_bound);
  SparsePolynomial<Rational> f(2);
  const int n = c.rng.uniform(1, 3);
  for (int t = 0; t < n; ++t) f.add_term({c.rng.uniform(0, 2), c.rng.uniform(0, 2)}, c.rng.nonzero_rational());
  if (f.is_zero()) f.add_term({0, 0}, 1);
  return verdict(!spectral_module_action(p, f).is_zero(), c, "nonzero class killed by " + to_string(p));
}

}  // namespace properties

/// Properties in report order.
inline std::vector<PropertySpec> property_specs() {
  using namespace properties;
  return {
      {"associativity", 1, associativity, {}},
      {"ord_subadditivity", 2, ord_subadditivity, {"equality_branch", "strict_branch"}},
      {"symbol_multiplicativity", 3, symbol_multiplicativity, {}},
      {"component_reassembly", 4, component_reassembly, {}},
      {"gamma_additivity", 5, gamma_additivity, {}},
      {"a1_closure", 6, a1_closure, {}},
      {"normalized_preservation", 7, normalized_preservation, {}},
      {"special_change_characterization", 8, special_change_characterization, {}},
      {"precision_soundness", 9, precision_soundness, {}},
      {"change_homomorphism", 10, change_homomorphism, {}},
      {"spectral_torsion_free", 11, spectral_torsion_free, {}},
  };
}

/// Runs every property, one task per property; results keep report order.
inline std::vector<PropertyResult> run_property_suite(const PropertyConfig& cfg, bool parallel = true) {
  const auto specs = property_specs();
  std::vector<PropertyResult> out;
  if (!parallel) {
    for (const auto& s : specs) out.push_back(run_property(s, cfg));
    return out;
  }
  std::vector<std::future<PropertyResult>> jobs;
  for (const auto& s : specs) jobs.push_back(std::async(std::launch::async, run_property, s, cfg));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace godeaux::pdo
