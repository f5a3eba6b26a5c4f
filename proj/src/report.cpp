#include "symcut/errors.hpp"
#include "symcut/verifier.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace symcut {

namespace {

std::string real17(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// nlohmann's writer uses shortest round-trip digits; settings go through this
// one so every real in the report has the same 17-digit format.
void write_value(std::ostringstream& out, const nlohmann::json& v) {
  if (v.is_object()) {
    out << '{';
    bool first = true;
    for (const auto& [key, item] : v.items()) {
      if (!first) out << ", ";
      first = false;
      out << nlohmann::json(key).dump() << ": ";
      write_value(out, item);
    }
    out << '}';
  } else if (v.is_array()) {
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ", ";
      write_value(out, v[i]);
    }
    out << ']';
  } else if (v.is_number_float()) {
    out << real17(v.get<double>());
  } else {
    out << v.dump();
  }
}

double real_or_inf(const nlohmann::json& v) {
  return v.is_null() ? std::numeric_limits<double>::infinity() : v.get<double>();
}

}  // namespace

std::string to_json(const std::vector<CheckReport>& reports, bool include_timing) {
  if (reports.empty()) return "[]";
  std::ostringstream out;
  out << "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const CheckReport& r = reports[i];
    out << "  {\"id\": " << nlohmann::json(r.id).dump() << ", \"seed\": " << r.seed
        << ", \"samples\": " << r.samples << ", \"max_residual\": " << real17(r.max_residual)
        << ", \"tolerance\": " << real17(r.tolerance)
        << ", \"passed\": " << (r.passed ? "true" : "false")
        << ", \"kind\": " << (r.existence ? "\"existence\"" : "\"bound\"");
    if (include_timing) out << ", \"elapsed_s\": " << real17(r.elapsed.count());
    if (r.witness) {
      out << ", \"witness\": {\"setting\": ";
      write_value(out, r.witness->setting);
      out << ", \"input\": [";
      for (std::size_t k = 0; k < r.witness->input.size(); ++k) {
        if (k) out << ", ";
        out << real17(r.witness->input[k]);
      }
      out << "]}";
    }
    out << '}' << (i + 1 < reports.size() ? ",\n" : "\n");
  }
  out << ']';
  return out.str();
}

std::vector<CheckReport> reports_from_json(std::string_view text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  std::vector<CheckReport> out;
  for (const auto& item : doc) {
    CheckReport r;
    r.id = item.at("id").get<std::string>();
    r.seed = item.at("seed").get<std::uint64_t>();
    r.samples = item.at("samples").get<int>();
    r.max_residual = real_or_inf(item.at("max_residual"));
    r.tolerance = real_or_inf(item.at("tolerance"));
    r.passed = item.at("passed").get<bool>();
    r.existence = item.at("kind").get<std::string>() == "existence";
    if (item.contains("elapsed_s")) r.elapsed = std::chrono::duration<double>(item["elapsed_s"].get<double>());
    if (item.contains("witness")) {
      Witness w;
      w.setting = item["witness"].at("setting");
      w.input = item["witness"].at("input").get<std::vector<double>>();
      r.witness = std::move(w);
    }
    out.push_back(std::move(r));
  }
  return out;
}

void emit_report(const std::vector<CheckReport>& reports, const ReportOptions& options,
                 std::ostream& out) {
  if (options.format == ReportFormat::json) {
    out << to_json(reports, options.include_timing) << '\n';
    return;
  }
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.id.size());
  char line[256];
  std::snprintf(line, sizeof line, "%-*s  %-9s  %7s  %-12s  %-12s  %-6s  %8s\n",
                static_cast<int>(width), "check", "kind", "samples", "value", "tolerance", "status",
                "time_s");
  out << line;
  int failed = 0;
  for (const auto& r : reports) {
    failed += r.passed ? 0 : 1;
    std::snprintf(line, sizeof line, "%-*s  %-9s  %7d  %-12.4e  %-12.4e  %-6s  %8.3f\n",
                  static_cast<int>(width), r.id.c_str(), r.existence ? "existence" : "bound",
                  r.samples, r.max_residual, r.tolerance, r.passed ? "PASS" : "FAIL",
                  r.elapsed.count());
    out << line;
  }
  out << reports.size() - failed << '/' << reports.size() << " checks passed\n";
}

void emit_report(const std::vector<CheckReport>& reports, const ReportOptions& options,
                 const std::string& path) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open report destination: " + path);
  emit_report(reports, options, file);
  if (!file) throw UsageError("failed writing report to: " + path);
}

}  // namespace symcut
