#pragma once

// Verification report: an ordered list of named checks with provenance tags,
// plus run metadata. Serializes to JSON and to a plain-text table.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace godeaux {

enum class Provenance { paper, trivial, derived, model_derived, assumed_per_paper };
enum class Status { pass, fail, undecidable };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::paper: return "paper";
    case Provenance::trivial: return "trivial";
    case Provenance::derived: return "derived";
    case Provenance::model_derived: return "model-derived";
    case Provenance::assumed_per_paper: return "assumed-per-paper";
  }
  return "?";
}

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::undecidable: return "undecidable";
  }
  return "?";
}

struct Check {
  std::string id;
  std::string anchor;  // where the checked statement comes from
  std::string expected;
  std::string actual;
  Provenance provenance = Provenance::derived;
  Status status = Status::fail;
};

namespace detail {
template <class T>
std::string stringify(const T& v) {
  if constexpr (std::is_same_v<T, bool>) {
    return v ? "true" : "false";
  } else if constexpr (std::is_convertible_v<T, std::string>) {
    return std::string(v);
  } else {
    std::ostringstream os;
    os << v;
    return os.str();
  }
}

template <class T, class U>
bool values_equal(const T& a, const U& b) {
  if constexpr (std::is_integral_v<T> && std::is_integral_v<U> && !std::is_same_v<T, bool> && !std::is_same_v<U, bool>)
    return std::cmp_equal(a, b);
  else
    return a == b;
}
}  // namespace detail

/// Check passing iff expected == actual.
template <class T, class U>
Check check_equal(std::string id, std::string anchor, const T& expected, const U& actual, Provenance p) {
  return {std::move(id), std::move(anchor), detail::stringify(expected), detail::stringify(actual), p,
          detail::values_equal(expected, actual) ? Status::pass : Status::fail};
}

inline Check check_true(std::string id, std::string anchor, bool actual, Provenance p, std::string detail_text = {}) {
  return {std::move(id), std::move(anchor), "true", detail_text.empty() ? (actual ? "true" : "false") : detail_text, p,
          actual ? Status::pass : Status::fail};
}

struct ReportMetadata {
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 42;
  int trials = 500;
  int precision = 12;
  int d_bound = 6;
  std::string tool_version = "1.0.0";
  std::optional<std::string> timestamp;
};

class VerificationReport {
 public:
  ReportMetadata metadata;

  void add(Check c) { entries_.push_back(std::move(c)); }
  void add(const std::vector<Check>& cs) { entries_.insert(entries_.end(), cs.begin(), cs.end()); }

  const std::vector<Check>& entries() const { return entries_; }

  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.status == s;
    return n;
  }

  /// Undecidable entries are counted separately and never fail the report.
  bool overall_pass() const { return count(Status::fail) == 0; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json meta;
    meta["tool_version"] = metadata.tool_version;
    meta["primes"] = metadata.primes;
    meta["seed"] = metadata.seed;
    meta["trials"] = metadata.trials;
    meta["pdo_budget"] = {{"T", metadata.precision}, {"d_bound", metadata.d_bound}};
    if (metadata.timestamp) meta["timestamp"] = *metadata.timestamp;

    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : entries_)
      entries.push_back({{"check", e.id},
                         {"anchor", e.anchor},
                         {"expected", e.expected},
                         {"actual", e.actual},
                         {"provenance", to_string(e.provenance)},
                         {"status", to_string(e.status)}});

    nlohmann::ordered_json out;
    out["metadata"] = meta;
    out["entries"] = entries;
    out["summary"] = {{"pass", count(Status::pass)},
                      {"fail", count(Status::fail)},
                      {"undecidable", count(Status::undecidable)},
                      {"overall", overall_pass() ? "pass" : "fail"}};
    return out;
  }

  void print_text(std::ostream& os) const {
    for (const auto& e : entries_) {
      os << '[' << to_string(e.status) << "] " << e.id << "  expected=" << e.expected << "  actual=" << e.actual
         << "  (" << to_string(e.provenance) << "; " << e.anchor << ")\n";
    }
    os << "summary: " << count(Status::pass) << " pass, " << count(Status::fail) << " fail, "
       << count(Status::undecidable) << " undecidable -> " << (overall_pass() ? "PASS" : "FAIL") << '\n';
  }

 private:
  std::vector<Check> entries_;
};

}  // namespace godeaux
