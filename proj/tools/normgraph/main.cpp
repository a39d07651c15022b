#include <CLI11.hpp>
#include <exception>
#include <iostream>
#include <map>
#include <thread>

#include "commands.hpp"

using namespace normgraph::cli;

int main(int argc, char** argv) {
  CLI::App app{"Projective norm graphs: qualifying-prime sieve, biclique witnesses, censuses"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  RunConfig cfg;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string format;
  std::string cache_dir;

  const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--jobs,-j", cfg.jobs, "Worker threads (output never depends on it)")->check(CLI::Range(1u, 1024u));
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--cache-dir", cache_dir, "Cache directory (overrides NORMGRAPH_CACHE)");
    sub->add_flag("--no-cache", cfg.no_cache, "Disable the cache");
  };

  auto* sieve = app.add_subcommand("sieve", "List qualifying primes up to a limit with density statistics");
  sieve->add_option("--limit", cfg.limit, "Upper bound (inclusive)")->required();
  common(sieve);

  auto* w46 = app.add_subcommand("witness46", "Build and verify the K_{4,6} witness in P(p,4)");
  w46->add_option("--p", cfg.p, "Prime (default 7)");
  w46->add_option("--out", cfg.out, "Also write the witness JSON here");
  common(w46);

  auto* census = app.add_subcommand("census", "Maximum common-neighborhood size over k-subsets");
  census->add_option("--p", cfg.p, "Prime")->required();
  census->add_option("--t", cfg.t, "Graph parameter t >= 3")->capture_default_str();
  census->add_option("--k", cfg.k, "Subset size (default t)");
  census->add_option("--budget", cfg.budget, "Maximum subsets for an exhaustive census")->capture_default_str();
  census->add_flag("--sample", cfg.sample, "Seeded sampling instead of exhaustive enumeration");
  census->add_option("--trials", cfg.trials, "Sampled subsets")->capture_default_str();
  census->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
  common(census);

  auto* verify = app.add_subcommand("verify", "Re-verify a stored witness JSON file");
  verify->add_option("path", cfg.path, "Witness file")->required();
  common(verify);

  auto* exp = app.add_subcommand("export", "Write the edge list of P(p,t)");
  exp->add_option("--p", cfg.p, "Prime")->required();
  exp->add_option("--t", cfg.t, "Graph parameter t >= 3")->capture_default_str();
  exp->add_option("--out", cfg.out, "Edge list path (default edges-p<p>-t<t>.txt)");
  common(exp);

  std::uint64_t general_limit = 100;
  auto* general = app.add_subcommand("witness-general", "Search (p, r) and verify a K_{t-1,m} witness in P(p,t)");
  general->add_option("--t", cfg.t, "Graph parameter t >= 4")->capture_default_str();
  general->add_option("--m", cfg.m, "Size of the second part")->capture_default_str();
  general->add_option("--limit", general_limit, "Largest prime scanned")->capture_default_str();
  general->add_flag("--all", cfg.all, "Report every (p, r) found instead of the first");
  general->add_option("--seed", cfg.seed, "Root extraction seed")->capture_default_str();
  general->add_option("--out", cfg.out, "Also write the witness JSON here");
  common(general);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (!format.empty()) cfg.format = formats.at(format);
  if (!cache_dir.empty()) cfg.cache_dir = cache_dir;

  try {
    if (*sieve) return cmd_sieve(cfg, std::cout, std::cerr);
    if (*w46) return cmd_witness46(cfg, std::cout, std::cerr);
    if (*census) return cmd_census(cfg, std::cout, std::cerr);
    if (*verify) return cmd_verify(cfg, std::cout, std::cerr);
    if (*exp) return cmd_export(cfg, std::cout, std::cerr);
    if (*general) {
      cfg.limit = general_limit;
      return cmd_witness_general(cfg, std::cout, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return kExitUsage;
}
