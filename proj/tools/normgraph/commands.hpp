#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace normgraph::cli {

enum class Format { kText, kJson, kCsv };

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // unverified witness, bound violation, non-qualifying prime
inline constexpr int kExitUsage = 2;   // invalid flags, malformed input, guard exceeded

struct RunConfig {
  std::optional<std::uint64_t> p;
  int t = 4;
  int m = 2;
  std::optional<int> k;
  std::uint64_t limit = 0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10'000'000;
  bool sample = false;
  bool all = false;
  Format format = Format::kText;
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  unsigned jobs = 1;
  std::string path;               // verify input
  std::optional<std::string> out;  // export / witness output file
};

int cmd_sieve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_witness46(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_census(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_witness_general(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace normgraph::cli
