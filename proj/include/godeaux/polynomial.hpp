#pragma once

// Sparse multivariate polynomials over a pluggable coefficient domain
// (std::int64_t, Rational or FieldElement).

#include "godeaux/exact_arith.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <type_traits>

namespace godeaux {

using Exponents = std::vector<int>;

namespace detail {

template <class R>
R zero_like(const R& sample) {
  if constexpr (std::is_same_v<R, FieldElement>)
    return FieldElement(0, sample.modulus());
  else
    return R(0);
}

template <class R>
R one_like(const R& sample) {
  if constexpr (std::is_same_v<R, FieldElement>)
    return FieldElement(1, sample.modulus());
  else
    return R(1);
}

template <class R>
R power(const R& base, int e) {
  R acc = one_like(base);
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

}  // namespace detail

/// Map from exponent tuples to nonzero coefficients. Terms iterate in
/// lexicographic order of their exponent tuples.
template <class R>
class SparsePolynomial {
 public:
  using Terms = std::map<Exponents, R>;

  explicit SparsePolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static SparsePolynomial monomial(Exponents e, R coeff) {
    SparsePolynomial p(e.size());
    p.add_term(std::move(e), std::move(coeff));
    return p;
  }

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::optional<R> coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  SparsePolynomial& add_term(Exponents e, const R& coeff) {
    if (e.size() != num_vars_) throw std::invalid_argument("exponent tuple has wrong arity");
    for (int x : e)
      if (x < 0) throw std::invalid_argument("negative exponent");
    if (godeaux::is_zero(coeff)) return *this;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), coeff);
    } else {
      it->second = it->second + coeff;
      if (godeaux::is_zero(it->second)) terms_.erase(it);
    }
    return *this;
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    a.check_arity(b);
    SparsePolynomial out(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }

  SparsePolynomial scaled(const R& s) const {
    SparsePolynomial out(num_vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) os << "*z" << (i + 1) << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return os.str();
  }

 private:
  void check_arity(const SparsePolynomial& o) const {
    if (o.num_vars_ != num_vars_) throw std::invalid_argument("polynomials in different numbers of variables");
  }

  std::size_t num_vars_;
  Terms terms_;
};

/// Exact evaluation by summing terms.
template <class R>
R poly_eval(const SparsePolynomial<R>& p, std::span<const R> point) {
  if (point.size() != p.num_vars())
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                                std::to_string(p.num_vars()) + " variables");
  std::optional<R> acc;
  if (!point.empty())
    acc = detail::zero_like(point.front());
  else if (!p.is_zero())
    acc = detail::zero_like(p.terms().begin()->second);
  else if constexpr (std::is_default_constructible_v<R>)
    return R(0);
  else
    throw std::invalid_argument("cannot infer coefficient field of a constant zero polynomial");

  for (const auto& [e, c] : p.terms()) {
    R t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t = t * detail::power(point[i], e[i]);
    *acc = *acc + t;
  }
  return *acc;
}

template <class R>
R poly_eval(const SparsePolynomial<R>& p, const std::vector<R>& point) {
  return poly_eval(p, std::span<const R>(point));
}

/// Formal partial derivative in variable `var`.
template <class R>
SparsePolynomial<R> poly_partial(const SparsePolynomial<R>& p, std::size_t var) {
  if (var >= p.num_vars()) throw std::out_of_range("partial derivative variable out of range");
  SparsePolynomial<R> out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents d(e);
    --d[var];
    out.add_term(std::move(d), c * static_cast<std::int64_t>(e[var]));
  }
  return out;
}

/// Substitutes zero for variable `var` and drops it, giving a polynomial in
/// one fewer variable.
template <class R>
SparsePolynomial<R> restrict_to_coordinate_hyperplane(const SparsePolynomial<R>& p, std::size_t var) {
  if (var >= p.num_vars()) throw std::out_of_range("restriction variable out of range");
  SparsePolynomial<R> out(p.num_vars() - 1);
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != 0) continue;
    Exponents d;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var) d.push_back(e[i]);
    out.add_term(std::move(d), c);
  }
  return out;
}

/// Polynomial over F_q flattened for fast repeated evaluation on raw
/// coordinate values (used by the brute-force point sweeps).
class CompiledFieldPolynomial {
 public:
  explicit CompiledFieldPolynomial(const SparsePolynomial<FieldElement>& p, std::uint64_t q)
      : q_(q), num_vars_(p.num_vars()) {
    for (const auto& [e, c] : p.terms()) {
      if (c.modulus() != q) throw std::invalid_argument("compiled polynomial modulus mismatch");
      terms_.push_back({e, c.value()});
      for (int x : e) max_exp_ = std::max(max_exp_, x);
    }
  }

  std::uint64_t modulus() const { return q_; }

  /// `powers[v][k]` must hold x_v^k mod q for k <= max exponent.
  std::uint64_t eval(const std::vector<std::vector<std::uint64_t>>& powers) const {
    std::uint64_t acc = 0;
    for (const auto& t : terms_) {
      std::uint64_t v = t.coeff;
      for (std::size_t i = 0; i < num_vars_; ++i) v = v * powers[i][t.exps[i]] % q_;
      acc += v;
      if (acc >= q_) acc -= q_;
    }
    return acc;
  }

  int max_exponent() const { return max_exp_; }

 private:
  struct Term {
    Exponents exps;
    std::uint64_t coeff;
  };
  std::uint64_t q_;
  std::size_t num_vars_;
  std::vector<Term> terms_;
  int max_exp_ = 0;
};

inline void fill_power_table(std::span<const std::uint64_t> x, std::uint64_t q, int max_exp,
                             std::vector<std::vector<std::uint64_t>>& table) {
  table.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    table[i].resize(static_cast<std::size_t>(max_exp) + 1);
    table[i][0] = 1;
    for (int k = 1; k <= max_exp; ++k) table[i][k] = table[i][k - 1] * x[i] % q;
  }
}

/// True iff the projective hypersurface {p = 0} in P^{n-1}(F_q) has no point
/// where p and all of its partial derivatives vanish.
inline bool hypersurface_is_smooth_over(const SparsePolynomial<FieldElement>& p, std::uint64_t q) {
  if (p.num_vars() < 2) throw std::invalid_argument("hypersurface needs at least two homogeneous variables");
  if (p.is_zero()) return false;
  std::vector<CompiledFieldPolynomial> system{CompiledFieldPolynomial(p, q)};
  for (std::size_t v = 0; v < p.num_vars(); ++v) system.emplace_back(poly_partial(p, v), q);
  int max_exp = 0;
  for (const auto& f : system) max_exp = std::max(max_exp, f.max_exponent());

  bool smooth = true;
  std::vector<std::vector<std::uint64_t>> table;
  for_each_projective_point(q, p.num_vars() - 1, [&](std::span<const std::uint64_t> x) {
    if (!smooth) return;
    fill_power_table(x, q, max_exp, table);
    for (const auto& f : system)
      if (f.eval(table) != 0) return;
    smooth = false;
  });
  return smooth;
}

}  // namespace godeaux
