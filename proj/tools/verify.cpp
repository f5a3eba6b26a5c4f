// Command-line front end for the check registry.
//
//   verify run [--suite GLOB] [--n INT]... [--radius REAL]... [--samples INT]
//              [--seed INT] [--tol-profile default|strict] [--format text|json]
//              [--out PATH] [--tolerance REAL] [--timing]
//   verify list
//
// Exit status: 0 all checks passed, 1 some check failed, 2 usage error.

#include "symcut/errors.hpp"
#include "symcut/verifier.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

constexpr int kUsage = 2;

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used, 10);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw symcut::UsageError("VERIFY_SEED is not a non-negative integer: " + text);
  }
  return value;
}

void print_registry() {
  std::size_t width = 2;
  for (const auto& d : symcut::registry()) width = std::max(width, d.id.size());
  for (const auto& d : symcut::registry()) {
    std::cout << d.id << std::string(width + 2 - d.id.size(), ' ') << '[' << d.anchor << "]  "
              << d.summary << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of symplectic cut constructions"};
  app.require_subcommand(1);

  std::string suite = "*";
  std::vector<int> dims;
  std::vector<double> radii;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::string profile = "default";
  std::string format = "text";
  std::string out_path;
  bool timing = false;

  CLI::App* run = app.add_subcommand("run", "Run the checks matching a glob");
  run->add_option("--suite", suite, "Glob over check ids")->capture_default_str();
  run->add_option("--n", dims, "Dimension n (repeatable)")->check(CLI::PositiveNumber);
  run->add_option("--radius", radii, "Radius r (repeatable)")->check(CLI::PositiveNumber);
  run->add_option("--samples", samples, "Samples per case")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Master seed (default 42, or VERIFY_SEED)");
  run->add_option("--tol-profile", profile, "Tolerance profile")
      ->check(CLI::IsMember({"default", "strict"}))
      ->capture_default_str();
  run->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  run->add_option("--out", out_path, "Write the report here instead of stdout");
  run->add_option("--tolerance", tolerance, "Override every selected check's tolerance")
      ->check(CLI::PositiveNumber);
  run->add_flag("--timing", timing, "Include elapsed times in JSON output");

  app.add_subcommand("list", "Print the registry with anchors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (app.got_subcommand("list")) {
      print_registry();
      return 0;
    }

    symcut::CheckParams params;
    params.dims = dims;
    params.radii = radii;
    params.samples = samples;
    params.tolerance = tolerance;
    params.profile =
        profile == "strict" ? symcut::ToleranceProfile::strict() : symcut::ToleranceProfile::standard();

    std::uint64_t master = 42;
    if (seed) {
      master = *seed;
    } else if (const char* env = std::getenv("VERIFY_SEED")) {
      master = parse_seed(env);
    }

    const symcut::SuiteResult result = symcut::run_suite(suite, params, master);
    symcut::ReportOptions options;
    options.format = format == "json" ? symcut::ReportFormat::json : symcut::ReportFormat::text;
    options.include_timing = timing;
    if (out_path.empty()) {
      symcut::emit_report(result.reports, options, std::cout);
    } else {
      symcut::emit_report(result.reports, options, out_path);
    }
    return result.exit_status;
  } catch (const symcut::UsageError& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return kUsage;
  }
}
