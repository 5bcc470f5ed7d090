#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jeskit/numerics/interval.hpp"

namespace jeskit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // certification or constraint failure
inline constexpr int kExitInvalid = 2;  // bad input

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kPrecisionEnv = "JESKIT_PRECISION_BITS";

struct RunConfig {
  std::string command;
  std::optional<std::string> m, n;
  unsigned long cap = 40;
  unsigned long m_max = 60;
  std::optional<long> precision_bits;  // unset: per-command default
  std::string theorem = "1.2";
  std::string format = "text";
  unsigned jobs = 1;
  std::string output_path;
  std::string csv_path;
  bool progress = true;
  bool reproducible = false;  // omit the execution block
  bool assume_y_gt_1 = true;

  // threshold
  std::optional<std::string> at;
  // symbols
  std::optional<std::string> jacobi, quartic, primary, modulus;
  // laurent
  std::optional<std::string> a2, bprime, b1, b2;
  std::optional<unsigned long> L;

  /// The explicit precision, or `fallback` when none was given.
  Precision precision_or(Precision fallback) const;
};

struct RuleRef {
  std::string id;
  std::string anchor;
};

struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<RuleRef> rules;
  std::vector<std::string> warnings;
  int exit_code = kExitOk;
  unsigned jobs = 1;
  double wall_time_ms = 0;

  void add_rule(const std::string& id);
  nlohmann::ordered_json to_json(bool with_execution = true) const;
  std::string to_text() const;
};

/// Interval as {"lo": ..., "hi": ...} with outward-rounded decimal strings.
nlohmann::ordered_json interval_json(const RInterval& v, int digits = 20);

Report cmd_verify(const RunConfig& cfg, std::ostream& err);
Report cmd_scan(const RunConfig& cfg, std::ostream& err);
Report cmd_threshold(const RunConfig& cfg, std::ostream& err);
Report cmd_symbols(const RunConfig& cfg, std::ostream& err);
Report cmd_laurent(const RunConfig& cfg, std::ostream& err);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jeskit::cli
