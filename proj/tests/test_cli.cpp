#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "cache.hpp"
#include "commands.hpp"

using namespace normgraph::cli;
namespace fs = std::filesystem;

namespace {

using Command = std::function<int(const RunConfig&, std::ostream&, std::ostream&)>;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const Command& cmd, RunConfig cfg) {
  std::ostringstream out, err;
  Run r;
  r.code = cmd(cfg, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

RunConfig uncached() {
  RunConfig c;
  c.no_cache = true;
  return c;
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("normgraph-test-" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

int shell(const std::string& args) {
  const std::string cmd = std::string(NORMGRAPH_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void check_jobs_invariant(const Command& cmd, RunConfig cfg) {
  cfg.jobs = 1;
  const Run base = run(cmd, cfg);
  for (unsigned jobs : {2u, 8u}) {
    cfg.jobs = jobs;
    const Run other = run(cmd, cfg);
    CHECK(other.code == base.code);
    CHECK(other.out == base.out);
  }
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("fnv1a reference values") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
  }

  TEST_CASE("sieve output") {
    RunConfig c = uncached();
    c.limit = 150;
    const Run r = run(cmd_sieve, c);
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("qualifying primes <= 150: 7 37 139\n", 0) == 0);
    c.format = Format::kJson;
    const auto j = nlohmann::json::parse(run(cmd_sieve, c).out);
    CHECK(j["primes"] == nlohmann::json::array({7, 37, 139}));
    CHECK(j["count"] == 3);
    CHECK(j["pi"] == 35);
    c.limit = 6;
    CHECK(nlohmann::json::parse(run(cmd_sieve, c).out)["count"] == 0);
    c.format = Format::kCsv;
    c.limit = 13;
    const Run csv = run(cmd_sieve, c);
    CHECK(csv.out.rfind("p,qualifying,reason\n", 0) == 0);
    CHECK(csv.out.find("\n7,1,ok\n") != std::string::npos);
    CHECK(csv.out.find("\n13,0,6_not_cube\n") != std::string::npos);
    c.limit = 1;
    CHECK(run(cmd_sieve, c).code == kExitUsage);
  }

  TEST_CASE("witness46 exit codes") {
    RunConfig c = uncached();
    const Run ok = run(cmd_witness46, c);
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("verified") != std::string::npos);
    c.p = 13;
    const Run bad = run(cmd_witness46, c);
    CHECK(bad.code == kExitFailed);
    CHECK((bad.out + bad.err).find("6 is not a cube mod 13") != std::string::npos);
  }

  TEST_CASE("census exit codes") {
    RunConfig c = uncached();
    c.p = 3;
    c.t = 4;
    const Run small = run(cmd_census, c);
    CHECK(small.code == kExitOk);
    c.p = 7;
    CHECK(run(cmd_census, c).code == kExitUsage);
    c.sample = true;
    c.trials = 2000;
    c.format = Format::kJson;
    const Run sampled = run(cmd_census, c);
    CHECK(sampled.code == kExitOk);
    CHECK(nlohmann::json::parse(sampled.out)["max_common"] == 6);
  }

  TEST_CASE("output does not depend on the worker count") {
    RunConfig sieve = uncached();
    sieve.limit = 30000;
    check_jobs_invariant(cmd_sieve, sieve);
    sieve.format = Format::kCsv;
    check_jobs_invariant(cmd_sieve, sieve);

    RunConfig census = uncached();
    census.p = 3;
    census.t = 4;
    census.k = 3;
    check_jobs_invariant(cmd_census, census);
    census.p = 7;
    census.k = 4;
    census.sample = true;
    census.trials = 3000;
    census.seed = 11;
    check_jobs_invariant(cmd_census, census);

    RunConfig general = uncached();
    general.t = 4;
    general.m = 3;
    general.limit = 400;
    general.all = true;
    general.format = Format::kJson;
    check_jobs_invariant(cmd_witness_general, general);

    RunConfig w = uncached();
    w.p = 37;
    check_jobs_invariant(cmd_witness46, w);
  }

  TEST_CASE("cache entries are written and reproduce the same output") {
    const fs::path dir = scratch("cache");
    RunConfig c;
    c.cache_dir = dir.string();
    c.limit = 200;
    c.m = 2;
    const Run first = run(cmd_witness_general, c);
    CHECK(first.code == kExitOk);
    CHECK_FALSE(fs::is_empty(dir));
    const Run second = run(cmd_witness_general, c);
    CHECK(second.out == first.out);

    RunConfig s;
    s.cache_dir = dir.string();
    s.limit = 500;
    const Run a = run(cmd_sieve, s), b = run(cmd_sieve, s);
    CHECK(a.out == b.out);

    const Cache cache(dir);
    CHECK(cache.path_for("sieve", "x", "csv").filename().string().rfind("sieve-", 0) == 0);
    CHECK_FALSE(Cache::resolve(dir.string(), true).has_value());
    CHECK(Cache::resolve(dir.string(), false) == dir);
    fs::remove_all(dir);
  }

  TEST_CASE("verify round trip through files") {
    const fs::path dir = scratch("verify");
    RunConfig w = uncached();
    w.out = (dir / "w46.json").string();
    REQUIRE(run(cmd_witness46, w).code == kExitOk);

    RunConfig v = uncached();
    v.path = *w.out;
    CHECK(run(cmd_verify, v).code == kExitOk);

    nlohmann::json j;
    std::ifstream(*w.out) >> j;
    j["R"][0]["a"] = 2;
    std::ofstream(dir / "tampered.json") << j.dump();
    v.path = (dir / "tampered.json").string();
    CHECK(run(cmd_verify, v).code == kExitFailed);

    std::ofstream(dir / "broken.json") << "{\"p\": 7, ";
    v.path = (dir / "broken.json").string();
    CHECK(run(cmd_verify, v).code == kExitUsage);

    RunConfig g = uncached();
    g.limit = 20;
    g.out = (dir / "general.json").string();
    REQUIRE(run(cmd_witness_general, g).code == kExitOk);
    v.path = *g.out;
    CHECK(run(cmd_verify, v).code == kExitOk);
    fs::remove_all(dir);
  }

  TEST_CASE("export writes the edge list") {
    const fs::path dir = scratch("export");
    RunConfig e = uncached();
    e.p = 3;
    e.t = 3;
    e.out = (dir / "edges.txt").string();
    const Run r = run(cmd_export, e);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("edges 68") != std::string::npos);
    std::ifstream in(*e.out);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 68);
    e.p = 101;
    e.t = 4;
    CHECK(run(cmd_export, e).code == kExitUsage);
    fs::remove_all(dir);
  }

  TEST_CASE("binary exit codes") {
    CHECK(shell("--help") == 0);
    CHECK(shell("") == 2);
    CHECK(shell("sieve") == 2);
    CHECK(shell("sieve --limit 150 --no-cache") == 0);
    CHECK(shell("sieve --limit abc --no-cache") == 2);
    CHECK(shell("witness46 --p 7 --no-cache") == 0);
    CHECK(shell("witness46 --p 13 --no-cache") == 1);
    CHECK(shell("witness46 --p 15 --no-cache") == 1);
    CHECK(shell("census --p 7 --t 4 --no-cache") == 2);
    CHECK(shell("census --p 3 --t 4 --no-cache") == 0);
    CHECK(shell("verify /nonexistent/file.json --no-cache") == 2);
    CHECK(shell("witness-general --t 4 --m 2 --limit 10 --no-cache") == 1);
    CHECK(shell("witness-general --t 4 --m 2 --limit 20 --no-cache --format json") == 0);
    CHECK(shell("census --p 7 --format xml") == 2);
  }
}
