#include <doctest.h>

#include "symcut/verifier.hpp"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Outcome {
  int status;
  std::string out;
};

Outcome run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(VERIFY_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("list prints every check with its anchor") {
  const Outcome o = run("list");
  CHECK(o.status == 0);
  for (const auto& d : symcut::registry()) {
    CHECK(o.out.find(d.id) != std::string::npos);
    CHECK(o.out.find("[" + d.anchor + "]") != std::string::npos);
  }
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run("").status == 2);
  CHECK(run("run --bogus").status == 2);
  CHECK(run("run --suite 'nothing-*'").status == 2);
  CHECK(run("run --n 0").status == 2);
  CHECK(run("run --radius -1").status == 2);
  CHECK(run("run --tol-profile loose").status == 2);
  CHECK(run("run --format xml").status == 2);
  CHECK(run("run --suite I-period-CP1 --out /nonexistent-dir/x.json").status == 2);
  CHECK(run("run --suite I-period-CP1", "VERIFY_SEED=abc").status == 2);
}

TEST_CASE("passing and failing runs") {
  const Outcome ok = run("run --suite 'P-segre-*'");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("P-segre-pullback") != std::string::npos);
  CHECK(ok.out.find("P-segre-equivariance") != std::string::npos);

  const Outcome bad = run("run --suite L-projemb --samples 20 --tolerance 1e-16 --format json");
  CHECK(bad.status == 1);
  const auto reports = symcut::reports_from_json(bad.out);
  REQUIRE(reports.size() == 1);
  CHECK_FALSE(reports[0].passed);
  REQUIRE(reports[0].witness.has_value());
  CHECK(std::abs(symcut::replay_witness("L-projemb", *reports[0].witness) - reports[0].max_residual) <= 1e-12);
}

TEST_CASE("seed resolution: flag, then environment, then 42") {
  const auto seed_of = [](const Outcome& o) { return symcut::reports_from_json(o.out).at(0).seed; };
  CHECK(seed_of(run("run --suite I-period-CP1 --format json")) == 42);
  CHECK(seed_of(run("run --suite I-period-CP1 --format json", "VERIFY_SEED=9")) == 9);
  CHECK(seed_of(run("run --suite I-period-CP1 --format json --seed 5", "VERIFY_SEED=9")) == 5);
}

TEST_CASE("json output to a file is byte-identical across runs") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "symcut_cli_a.json";
  const auto b = dir / "symcut_cli_b.json";
  const std::string args = "run --suite 'L-*' --samples 50 --n 2 --radius 1 --format json --out ";
  CHECK(run(args + a.string()).status == 0);
  CHECK(run(args + b.string()).status == 0);
  const std::string first = slurp(a);
  CHECK_FALSE(first.empty());
  CHECK(first == slurp(b));
  const auto parsed = symcut::reports_from_json(first);
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0].samples == 50);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("timing appears only on request") {
  CHECK(run("run --suite I-period-CP1 --format json").out.find("elapsed_s") == std::string::npos);
  CHECK(run("run --suite I-period-CP1 --format json --timing").out.find("elapsed_s") != std::string::npos);
}

TEST_CASE("strict profile is accepted") {
  const Outcome o = run("run --suite 'P-segre-*' --tol-profile strict --format json");
  CHECK(o.status == 0);
  CHECK(symcut::reports_from_json(o.out).at(0).tolerance == doctest::Approx(1e-7));
}
