// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "godeaux/cli.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>

using namespace godeaux;
using namespace godeaux::cli;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

// Every check in the suite passes and the named entries carry the given values.
void expect_suite(Outcome& o, const std::vector<Check>& checks, const std::map<std::string, std::string>& values) {
  std::map<std::string, const Check*> by_id;
  for (const auto& c : checks) {
    by_id[c.id] = &c;
    if (c.status == Status::fail) o.require(false, c.id + " failed (" + c.actual + ")");
  }
  for (const auto& [id, v] : values) {
    auto it = by_id.find(id);
    if (it == by_id.end())
      o.require(false, id + " missing");
    else
      o.require(it->second->actual == v, id + " = " + it->second->actual + ", expected " + v);
  }
}

using Clock = std::chrono::steady_clock;

bool criterion(int n, const std::string& title, double limit_ms, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (limit_ms > 0) o.require(ms < limit_ms, "took " + std::to_string(ms) + " ms, limit " + std::to_string(limit_ms));
  std::cout << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL") << "  " << title << "  [" << static_cast<long>(ms)
            << " ms]";
  if (!o.note.empty()) std::cout << "  " << o.note;
  std::cout << std::endl;
  return o.ok;
}

}  // namespace

int main() {
  bool all = true;

  all &= criterion(1, "invariant quintic monomials", 1.0, [](Outcome& o) {
    const auto ms = quintic::enumerate_monomials();
    o.require(ms.size() == 12, "monomial count " + std::to_string(ms.size()));
    o.require(ms.front() == quintic::MonomialExponent{5, 0, 0, 0}, "first monomial");
  });

  all &= criterion(2, "E8 roots and lattice", 10.0, [](Outcome& o) {
    expect_suite(o, lattice::lattice_checks(),
                 {{"lattice.root_count", "240"}, {"lattice.root_norms", "240"}, {"lattice.gram_determinant_abs", "1"}});
  });

  all &= criterion(3, "divisor candidates, orbits, lower bounds", 100.0, [](Outcome& o) {
    const auto checks = counts_suite();
    expect_suite(o, checks,
                 {{"counts.candidates", "1200"},
                  {"counts.orbits", "120"},
                  {"counts.good_lower_bound", "1080"},
                  {"counts.excellent_lower_bound", "840"}});
    for (const auto& c : checks)
      if (c.id == "counts.excellent_lower_bound")
        o.require(c.provenance == Provenance::model_derived, "840 must be tagged model-derived");
  });

  const auto rr = rr_suite();

  all &= criterion(4, "quotient invariants, curve genus, intersection and chi", 0, [&](Outcome& o) {
    expect_suite(o, rr,
                 {{"rr.quotient_invariants", "(1,1,11)"},
                  {"rr.euler_number", "11"},
                  {"rr.b2", "9"},
                  {"rr.curve_genus", "2"},
                  {"rr.D_dot_C", "4800"},
                  {"rr.chi_D", "0"},
                  {"rr.chi_D_zero_count", "1200"}});
  });

  all &= criterion(5, "Hilbert-polynomial conditions and quadratic growth", 0, [&](Outcome& o) {
    expect_suite(o, rr,
                 {{"rr.prespectral_hilbert", "4800"},
                  {"rr.growth_leading_coefficient", "1/2"},
                  {"rr.growth_fit_exact", "true"}});
  });

  all &= criterion(6, "Fermat member over F_11, F_31, F_41", 5000.0, [](Outcome& o) {
    Config cfg;
    cfg.primes = {11, 31, 41};
    cfg.coefficients = quintic::QuinticCoefficients::fermat();
    cfg.random_vectors_per_prime = 1000;
    expect_suite(o, surface_suite(cfg),
                 {{"surface.smoothness_evidence", "smooth (multi-prime evidence, 3 primes)"},
                  {"surface.q41.random_invariance", "1000"},
                  {"surface.q41.random_free_action_routes_agree", "1000"}});
  });

  all &= criterion(7, "family dimension and weight rank", 0, [](Outcome& o) {
    o.require(quintic::family_dimension() == 8, "dimension");
    o.require(quintic::weight_difference_rank(quintic::enumerate_monomials()) == 3, "weight rank");
  });

  all &= criterion(8, "bounded Diophantine solutions and intersection identity", 0, [](Outcome& o) {
    expect_suite(o, diophantine_suite(),
                 {{"diophantine.smooth_quadric", "(0,3)(2,5)(3,0)(5,2)"},
                  {"diophantine.cone", "(0,3)(5,2)"},
                  {"diophantine.pullback_identity", "15"}});
  });

  all &= criterion(9, "operator-algebra properties (seed 42, 500 trials, T 12, d 6)", 30000.0, [](Outcome& o) {
    Config cfg;
    expect_suite(o, pdo_suite(cfg), {});
  });

  all &= criterion(10, "byte-identical JSON reports", 0, [](Outcome& o) {
    Config cfg;
    cfg.timestamp = false;
    const auto a = build_report("all", cfg).to_json().dump(2);
    const auto b = build_report("all", cfg).to_json().dump(2);
    o.require(a == b, "reports differ");
    o.require(!a.empty(), "empty report");
  });

  return all ? 0 : 1;
}
