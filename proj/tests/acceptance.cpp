// Acceptance run: one PASS/FAIL line per criterion at the pinned tolerances
// and time budgets. Exit status is nonzero if any criterion fails.

#include "symcut/verifier.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace symcut;

namespace {

struct Step {
  std::string id;
  CheckParams params;
};

CheckParams with(std::vector<int> dims, std::vector<double> radii, std::optional<int> samples = {}) {
  CheckParams p;
  p.dims = std::move(dims);
  p.radii = std::move(radii);
  p.samples = samples;
  return p;
}

int failures = 0;

void verdict(int number, const std::string& title, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", number, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Runs the steps, requiring each to pass and the total to fit the budget.
// With per_step set, the budget applies to each step separately.
void criterion(int number, const std::string& title, const std::vector<Step>& steps, double budget_s,
               bool per_step = false) {
  bool ok = true;
  double total = 0.0;
  double slowest = 0.0;
  std::ostringstream detail;
  for (const auto& step : steps) {
    const CheckReport r = run_check(step.id, step.params, 42);
    ok = ok && r.passed;
    total += r.elapsed.count();
    slowest = std::max(slowest, r.elapsed.count());
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s %s %.3g vs %.3g; ", r.id.c_str(), r.passed ? "ok" : "FAILED",
                  r.max_residual, r.tolerance);
    detail << buf;
  }
  const double spent = per_step ? slowest : total;
  ok = ok && spent < budget_s;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.2f s of %.0f s%s", spent, budget_s, per_step ? " per check" : "");
  detail << buf;
  verdict(number, title, ok, detail.str());
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const int raw = std::system((std::string(VERIFY_BINARY) + " " + args).c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

void full_suite() {
  const auto dir = std::filesystem::temp_directory_path();
  const auto first = dir / "symcut_acceptance_1.json";
  const auto second = dir / "symcut_acceptance_2.json";
  bool ok = true;
  double slowest = 0.0;
  for (const auto& path : {first, second}) {
    const auto start = std::chrono::steady_clock::now();
    const int status = run_cli("run --format json --out " + path.string());
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    slowest = std::max(slowest, seconds);
    ok = ok && status == 0;
  }
  const std::string a = slurp(first);
  const std::string b = slurp(second);
  const bool identical = !a.empty() && a == b;
  std::size_t count = 0;
  bool all_passed = true;
  for (const auto& r : reports_from_json(a)) {
    ++count;
    all_passed = all_passed && r.passed;
  }
  ok = ok && identical && all_passed && count == registry().size() && slowest < 90.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu/%zu checks reported, all passed: %s, identical json: %s, %.2f s of 90 s",
                count, registry().size(), all_passed ? "yes" : "no", identical ? "yes" : "no", slowest);
  verdict(8, "full default suite", ok, buf);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
}

}  // namespace

int main() {
  const std::vector<int> dims{1, 2, 3};
  const std::vector<double> radii{0.5, 1.0, 2.0};

  criterion(1, "ball embedding pullback",
            {{"L-projemb", with(dims, {1.0, std::sqrt(2.0), 2.0}, 1000)}}, 10.0);

  criterion(2, "quadric embedding image and reverse lift",
            {{"L-sphereembedding", with({2}, {}, 1000)}, {"L-sphereembedding-inverse", with({2}, {}, 1000)}},
            5.0);

  criterion(3, "cosphere flow equals the scalar action; RK4 accuracy and order",
            {{"P-unitcut-flow", with(dims, radii, 100)},
             {"P-unitcut-rk4", with(dims, radii)},
             {"P-unitcut-rk4-order", with(dims, {})}},
            20.0);

  criterion(4, "branched cover: deck equivariance, fibers, descent of omega_r",
            {{"C-branchedcover-deck", with(dims, {}, 1000)},
             {"C-branchedcover-fibers", with(dims, {}, 100)},
             {"P-omega-r-descent", with(dims, radii)}},
            10.0);

  criterion(5, "Q^2 as CP^1 x CP^1",
            {{"P-segre-equivariance", with({}, {}, 1000)},
             {"P-segre-pullback", with({}, {}, 1000)},
             {"R-diag-antidiag", with({}, {}, 1000)}},
            10.0);

  criterion(6, "periods of CP^1, the conic and the diagonal",
            {{"I-period-CP1", with({}, {})}, {"I-period-Q1", with({}, {1.0})}}, 10.0);

  criterion(7, "negative remarks as witness searches",
            {{"R-omega-r-not-FS", with({2}, {1.0})},
             {"R-pi-not-symplectic", with(dims, {})},
             {"P-uneven-divergence", with(dims, {0.5})},
             {"P-evened-rk4", with(dims, {0.5})}},
            10.0, true);

  full_suite();
  return failures == 0 ? 0 : 1;
}
