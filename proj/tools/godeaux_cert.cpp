// Command-line front end: godeaux_cert <command> [flags]

#include "godeaux/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace godeaux::cli;

  CLI::App app{"Certification checks for Z/5 quotients of invariant quintics and truncated operator algebra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "1.0.0");

  std::string config_path, json_path, primes_csv, coeffs_csv;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  bool no_timestamp = false;

  app.add_option("--config", config_path, "JSON config {primes, coefficients, pdo_budget {T, d_bound}, trials, seed}");
  app.add_option("--json", json_path, "write the JSON report to this path");
  app.add_option("--primes", primes_csv, "comma-separated primes q = 1 mod 5");
  app.add_option("--coeffs", coeffs_csv, "twelve comma-separated integer coefficients a_1..a_12");
  app.add_option("--trials", trials, "trials per operator-algebra property");
  app.add_option("--seed", seed, "seed for every randomized check");
  app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp so reports are byte-reproducible");

  const std::vector<std::pair<std::string, std::string>> descriptions{
      {"all", "run every suite"},
      {"monomials", "invariant quintic monomials"},
      {"lattice", "E8 roots and the lattice K-perp"},
      {"surface", "invariance, free action, smoothness, transversality over F_q"},
      {"counts", "divisor candidates, orbits and lower bounds"},
      {"rr", "Riemann-Roch, Noether and Hilbert-polynomial conditions"},
      {"pdo", "randomized properties of the truncated operator algebra"},
      {"diophantine", "bounded integer solutions and the intersection identity"},
  };
  for (const auto& [name, text] : descriptions) app.add_subcommand(name, text)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Config cfg;
  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
    if (!primes_csv.empty()) cfg.primes = to_primes(parse_int_csv(primes_csv, "prime"));
    if (!coeffs_csv.empty()) cfg.coefficients = to_coefficients(parse_int_csv(coeffs_csv, "coefficient"));
    if (trials) cfg.trials = *trials;
    if (seed) cfg.seed = *seed;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  cfg.timestamp = !no_timestamp;
  if (!json_path.empty()) cfg.json_path = json_path;

  return run(app.get_subcommands().front()->get_name(), cfg, std::cout, std::cerr);
}
