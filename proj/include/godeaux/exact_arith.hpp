#pragma once

// Exact arithmetic substrate: prime fields, rationals, small integer linear
// algebra and projective point enumeration over F_q.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace godeaux {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Element of the prime field F_q. The value is always reduced into [0, q).
/// Mixing elements of different fields throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2) throw std::invalid_argument("field modulus must be >= 2");
    if (modulus > (std::uint64_t{1} << 31))
      throw std::invalid_argument("field modulus too large for 64-bit products");
    auto const m = static_cast<std::int64_t>(modulus);
    auto r = value % m;
    if (r < 0) r += m;
    value_ = static_cast<std::uint64_t>(r);
  }

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator-() const { return FieldElement(raw, modulus_, value_ == 0 ? 0 : modulus_ - value_); }

  FieldElement& operator+=(const FieldElement& o) {
    same_field(o);
    value_ += o.value_;
    if (value_ >= modulus_) value_ -= modulus_;
    return *this;
  }
  FieldElement& operator-=(const FieldElement& o) { return *this += -o; }
  FieldElement& operator*=(const FieldElement& o) {
    same_field(o);
    value_ = value_ * o.value_ % modulus_;
    return *this;
  }
  FieldElement& operator*=(std::int64_t n) { return *this *= FieldElement(n, modulus_); }
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, std::int64_t n) { return a *= n; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

  FieldElement pow(std::uint64_t e) const {
    std::uint64_t base = value_, acc = 1 % modulus_;
    while (e > 0) {
      if (e & 1) acc = acc * base % modulus_;
      base = base * base % modulus_;
      e >>= 1;
    }
    return FieldElement(raw, modulus_, acc);
  }

  /// Fermat inverse; the modulus is assumed prime.
  FieldElement inverse() const {
    if (value_ == 0) throw std::domain_error("inverse of zero in F_q");
    return pow(modulus_ - 2);
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.value_; }

 private:
  struct RawTag {};
  static constexpr RawTag raw{};
  FieldElement(RawTag, std::uint64_t modulus, std::uint64_t reduced) : value_(reduced), modulus_(modulus) {}

  void same_field(const FieldElement& o) const {
    if (o.modulus_ != modulus_) throw std::invalid_argument("field elements from different fields");
  }

  std::uint64_t value_;
  std::uint64_t modulus_;
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
template <class T>
bool is_zero(const T& x) {
  return x == 0;
}

/// Smallest g in F_q with g^5 = 1 and g != 1.
inline FieldElement primitive_fifth_root(std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("modulus " + std::to_string(q) + " is not prime");
  if (q % 5 != 1)
    throw std::invalid_argument("F_" + std::to_string(q) + " has no primitive fifth root of unity (q mod 5 != 1)");
  for (std::uint64_t g = 2; g < q; ++g) {
    FieldElement x(static_cast<std::int64_t>(g), q);
    if (x.pow(5).value() == 1) return x;
  }
  throw std::logic_error("no fifth root found in a field with q = 1 mod 5");
}

// Point of P^dim(F_q), stored with its first nonzero coordinate equal to 1.
class ProjectivePoint {
 public:
  ProjectivePoint(std::vector<std::uint64_t> coords, std::uint64_t q) : coords_(std::move(coords)), q_(q) {
    normalize();
  }
  ProjectivePoint(const std::vector<FieldElement>& coords) : q_(coords.empty() ? 0 : coords.front().modulus()) {
    for (const auto& c : coords) {
      if (c.modulus() != q_) throw std::invalid_argument("mixed fields in projective point");
      coords_.push_back(c.value());
    }
    normalize();
  }

  const std::vector<std::uint64_t>& coords() const { return coords_; }
  std::uint64_t modulus() const { return q_; }
  std::size_t dimension() const { return coords_.size() - 1; }

  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> out;
    out.reserve(coords_.size());
    for (auto c : coords_) out.emplace_back(static_cast<std::int64_t>(c), q_);
    return out;
  }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) {
    os << '(';
    for (std::size_t i = 0; i < p.coords_.size(); ++i) os << (i ? ":" : "") << p.coords_[i];
    return os << ')';
  }

 private:
  void normalize() {
    if (coords_.empty()) throw std::invalid_argument("projective point needs coordinates");
    for (auto& c : coords_) c %= q_;
    auto lead = std::find_if(coords_.begin(), coords_.end(), [](auto c) { return c != 0; });
    if (lead == coords_.end()) throw std::invalid_argument("projective point with all coordinates zero");
    FieldElement inv = FieldElement(static_cast<std::int64_t>(*lead), q_).inverse();
    for (auto& c : coords_) c = c * inv.value() % q_;
  }

  std::vector<std::uint64_t> coords_;
  std::uint64_t q_;
};

/// Visits every point of P^dim(F_q) once, in normalized form, as raw coordinate
/// values. Points with leading 1 in position 0 come first, then position 1, ...
inline void for_each_projective_point(std::uint64_t q, std::size_t dim,
                                      const std::function<void(std::span<const std::uint64_t>)>& visit) {
  if (dim < 1) throw std::invalid_argument("projective dimension must be >= 1");
  std::vector<std::uint64_t> x(dim + 1);
  for (std::size_t lead = 0; lead <= dim; ++lead) {
    std::fill(x.begin(), x.end(), 0);
    x[lead] = 1;
    // odometer over the free coordinates after `lead`
    while (true) {
      visit(x);
      std::size_t i = dim;
      while (i > lead && ++x[i] == q) x[i--] = 0;
      if (i == lead) break;
    }
  }
}

inline std::vector<ProjectivePoint> projective_points(std::uint64_t q, std::size_t dim) {
  std::vector<ProjectivePoint> out;
  for_each_projective_point(q, dim, [&](std::span<const std::uint64_t> x) {
    out.emplace_back(std::vector<std::uint64_t>(x.begin(), x.end()), q);
  });
  return out;
}

inline std::uint64_t projective_point_count(std::uint64_t q, std::size_t dim) {
  std::uint64_t total = 0, p = 1;
  for (std::size_t i = 0; i <= dim; ++i, p *= q) total += p;
  return total;
}

// ---------------------------------------------------------------------------
// Small dense integer matrices.

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Bareiss fraction-free elimination; exact for integer input.
inline BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Leading principal minors det(m[0..k][0..k]) for k = 1..n.
inline std::vector<BigInt> leading_principal_minors(const IntMatrix& m) {
  std::vector<BigInt> out;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    IntMatrix sub(k, std::vector<std::int64_t>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
    out.push_back(determinant(sub));
  }
  return out;
}

/// Rank over Q by Gaussian elimination in exact rationals.
inline std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace godeaux
