#pragma once

#include "symcut/numerics.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symcut {

enum class CheckKind {
  bound,      // passes iff the worst residual is <= tolerance
  existence,  // passes iff some sample's witness statistic exceeds the threshold
};

struct CheckDescriptor {
  std::string id;
  /// Manifest item the check certifies (see `manifest()`).
  std::string anchor;
  std::string summary;
  CheckKind kind = CheckKind::bound;
  bool uses_dims = false;
  bool uses_radii = false;
  std::vector<int> default_dims;
  std::vector<double> default_radii;
  int default_samples = 1;
  /// Tolerance (bound) or threshold (existence) before profile scaling.
  double tolerance = 0.0;
};

/// Input that produced a report's worst (or, for existence checks, best) value.
struct Witness {
  nlohmann::json setting;     // per-case parameters such as n and r
  std::vector<double> input;  // flat sample drawn for that case
};

struct CheckReport {
  std::string id;
  std::uint64_t seed = 0;
  int samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool existence = false;
  std::chrono::duration<double> elapsed{0.0};
  std::optional<Witness> witness;
};

/// Run-time overrides. Empty fields fall back to each check's defaults.
struct CheckParams {
  std::vector<int> dims;
  std::vector<double> radii;
  std::optional<int> samples;
  std::optional<double> tolerance;
  ToleranceProfile profile;

  /// Throws UsageError on n < 1, r <= 0, samples < 1 or a non-positive tolerance.
  void validate() const;
};

/// The in-scope statements every registry must cover, in registry order.
const std::vector<std::string>& manifest();

/// Registered checks in report order.
const std::vector<CheckDescriptor>& registry();

const CheckDescriptor& find_check(std::string_view id);

/// Deterministic in (id, params, seed). Throws UsageError for unknown ids or bad params.
CheckReport run_check(std::string_view id, const CheckParams& params, std::uint64_t seed);

/// Re-evaluates a single witness; reproduces the reported residual.
double replay_witness(std::string_view id, const Witness& witness,
                      const ToleranceProfile& profile = {});

struct SuiteResult {
  std::vector<CheckReport> reports;
  int exit_status = 0;  // 0 all passed, 1 any failed
};

/// Glob-matched subset of the registry, run concurrently, reported in registry order.
/// Throws UsageError when nothing matches.
SuiteResult run_suite(std::string_view filter, const CheckParams& params, std::uint64_t seed,
                      unsigned threads = 0);

std::vector<std::string> match_checks(std::string_view filter);

enum class ReportFormat { text, json };

struct ReportOptions {
  ReportFormat format = ReportFormat::text;
  /// Elapsed times vary run to run; JSON omits them unless asked.
  bool include_timing = false;
};

void emit_report(const std::vector<CheckReport>& reports, const ReportOptions& options,
                 std::ostream& out);

/// Writes to `path`; throws UsageError if the file cannot be opened.
void emit_report(const std::vector<CheckReport>& reports, const ReportOptions& options,
                 const std::string& path);

std::string to_json(const std::vector<CheckReport>& reports, bool include_timing = false);

/// Parses the JSON produced by to_json (witnesses included).
std::vector<CheckReport> reports_from_json(std::string_view text);

}  // namespace symcut
