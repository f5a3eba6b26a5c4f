#include "symcut/verifier.hpp"

#include "check_table.hpp"
#include "symcut/errors.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

namespace symcut {

namespace {

using detail::CheckImpl;
using detail::check_table;

const CheckImpl& find_impl(std::string_view id) {
  for (const auto& impl : check_table()) {
    if (impl.desc.id == id) return impl;
  }
  throw UsageError("unknown check id: " + std::string(id));
}

// A library error inside a sample counts as an unbounded residual for bound
// checks and as no witness for existence checks. Malformed witnesses propagate.
double score(const CheckImpl& impl, const nlohmann::json& setting, std::span<const double> input,
             const ToleranceProfile& profile) {
  const double failed = impl.desc.kind == CheckKind::existence ? 0.0 : std::numeric_limits<double>::infinity();
  double value;
  try {
    value = impl.evaluate(setting, input, profile);
  } catch (const UsageError&) {
    throw;
  } catch (const Error&) {
    return failed;
  }
  return std::isnan(value) ? failed : value;
}

}  // namespace

void CheckParams::validate() const {
  for (int n : dims) {
    if (n < 1) throw UsageError("dimension n must be >= 1");
  }
  for (double r : radii) {
    if (!(r > 0) || !std::isfinite(r)) throw UsageError("radius must be a positive real");
  }
  if (samples && *samples < 1) throw UsageError("samples must be >= 1");
  if (tolerance && !(*tolerance > 0)) throw UsageError("tolerance must be positive");
  try {
    profile.validate();
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
}

const std::vector<std::string>& manifest() {
  static const std::vector<std::string> items = {
      "ball-embedding",        "quadric-embedding", "cosphere-cut",  "branched-cover",
      "branch-nonsymplectic",  "segre-q2",          "diagonal-antidiagonal",
      "evened-bundle",         "radius-r-cut",      "compactification",
  };
  return items;
}

const std::vector<CheckDescriptor>& registry() {
  static const std::vector<CheckDescriptor> descriptors = [] {
    std::vector<CheckDescriptor> out;
    for (const auto& impl : check_table()) out.push_back(impl.desc);
    return out;
  }();
  return descriptors;
}

const CheckDescriptor& find_check(std::string_view id) { return find_impl(id).desc; }

CheckReport run_check(std::string_view id, const CheckParams& params, std::uint64_t seed) {
  const CheckImpl& impl = find_impl(id);
  params.validate();
  const auto started = std::chrono::steady_clock::now();
  const CheckDescriptor& d = impl.desc;

  const std::vector<int>& dims = d.uses_dims && !params.dims.empty() ? params.dims : d.default_dims;
  const std::vector<double>& radii =
      d.uses_radii && !params.radii.empty() ? params.radii : d.default_radii;
  const int samples = params.samples.value_or(d.default_samples);
  const bool existence = d.kind == CheckKind::existence;

  CheckReport report;
  report.id = d.id;
  report.seed = seed;
  report.existence = existence;
  report.tolerance = params.tolerance.value_or(
      d.tolerance * (impl.scale_with_profile ? params.profile.check_scale : 1.0));

  // Bound checks track the largest residual, existence checks the largest statistic.
  double extreme = existence ? -std::numeric_limits<double>::infinity() : 0.0;
  std::optional<Witness> extreme_at;
  const Rng base = Rng::for_stream(seed, d.id);
  for (const auto& setting : impl.settings(dims, radii)) {
    Rng rng = base.derive(setting.dump());
    const int count = impl.draw ? samples : 1;
    for (int i = 0; i < count; ++i) {
      std::vector<double> input;
      if (impl.draw) input = impl.draw(setting, rng, params.profile);
      const double value = score(impl, setting, input, params.profile);
      ++report.samples;
      if (!extreme_at || value > extreme) {
        extreme = value;
        extreme_at = Witness{setting, std::move(input)};
      }
    }
  }

  report.max_residual = extreme;
  report.passed = existence ? extreme > report.tolerance : extreme <= report.tolerance;
  if (existence || !report.passed) report.witness = std::move(extreme_at);
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

double replay_witness(std::string_view id, const Witness& witness, const ToleranceProfile& profile) {
  return score(find_impl(id), witness.setting, witness.input, profile);
}

std::vector<std::string> match_checks(std::string_view filter) {
  const std::string pattern(filter);
  std::vector<std::string> out;
  for (const auto& d : registry()) {
    if (fnmatch(pattern.c_str(), d.id.c_str(), 0) == 0) out.push_back(d.id);
  }
  return out;
}

SuiteResult run_suite(std::string_view filter, const CheckParams& params, std::uint64_t seed,
                      unsigned threads) {
  const std::vector<std::string> ids = match_checks(filter);
  if (ids.empty()) throw UsageError("no check matches '" + std::string(filter) + "'");
  params.validate();

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(ids.size()));

  std::vector<CheckReport> reports(ids.size());
  std::vector<std::exception_ptr> errors(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      try {
        reports[i] = run_check(ids[i], params, seed);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SuiteResult result;
  result.reports = std::move(reports);
  result.exit_status =
      std::all_of(result.reports.begin(), result.reports.end(), [](const auto& r) { return r.passed; })
          ? 0
          : 1;
  return result;
}

}  // namespace symcut
