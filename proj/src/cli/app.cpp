#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "jeskit/cli.hpp"
#include "jeskit/error.hpp"

#ifndef JESKIT_VERSION
#define JESKIT_VERSION "unknown"
#endif

namespace jeskit::cli {

namespace {

using Command = std::function<Report(const RunConfig&, std::ostream&)>;

constexpr long kMinPrecision = 64;
constexpr long kMaxPrecision = 1L << 20;

// CLI11 drops environment values that fail validation, so read it here.
std::optional<long> precision_from_env() {
  const char* raw = std::getenv(kPrecisionEnv);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(raw, &end, 10);
  if (errno != 0 || *end != '\0' || v < kMinPrecision || v > kMaxPrecision) {
    fail(ErrorKind::InvalidArgument, std::string(kPrecisionEnv) + " must be an integer in [" +
                                         std::to_string(kMinPrecision) + ", " +
                                         std::to_string(kMaxPrecision) + "], got '" + raw + "'");
  }
  return v;
}

void add_options(CLI::App& app, RunConfig& cfg) {
  app.add_option("--m", cfg.m, "generator m (verify)");
  app.add_option("--n", cfg.n, "generator n (verify)");
  app.add_option("--cap", cfg.cap, "exponent cap")->check(CLI::Range(2UL, 10000UL));
  app.add_option("--m-max", cfg.m_max, "largest m to scan");
  app.add_option("--precision-bits", cfg.precision_bits,
                 std::string("interval precision in bits (default from ") + kPrecisionEnv + ")")
      ->check(CLI::Range(kMinPrecision, kMaxPrecision));
  app.add_option("--theorem", cfg.theorem, "threshold selector: 1.2 (t^(3/5)) or 1.3 (t^(2/3))")
      ->check(CLI::IsMember({"1.2", "1.3"}));
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output_path, "write the report here instead of stdout");
  app.add_option("--csv", cfg.csv_path, "CSV export of a scan");
  app.add_flag("!--no-progress", cfg.progress, "silence progress on stderr");
  app.add_flag("--reproducible", cfg.reproducible, "omit timing and job count from JSON");
  app.add_flag("!--no-assume-y-gt-1", cfg.assume_y_gt_1, "do not take y > 1 as given in the parity engine");
  app.add_option("--at", cfg.at, "threshold point as a power of ten, e.g. 1e50000");
  app.add_option("--jacobi", cfg.jacobi, "Jacobi symbol numerator");
  app.add_option("--quartic", cfg.quartic, "quartic symbol numerator, re[,im]");
  app.add_option("--primary", cfg.primary, "primary associate of re,im");
  app.add_option("--mod", cfg.modulus, "modulus: integer or re,im");
  app.add_option("--a2", cfg.a2, "a2 (decimal)");
  app.add_option("--bprime", cfg.bprime, "b' (decimal)");
  app.add_option("--b1", cfg.b1, "b1 for a full Laurent check");
  app.add_option("--b2", cfg.b2, "b2 for a full Laurent check");
  app.add_option("--L", cfg.L, "override L for the Laurent check");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Verification toolkit for a^x + b^y = c^z over primitive Pythagorean triples",
               "jeskit"};
  app.set_version_flag("--version", JESKIT_VERSION);
  app.set_config("--config", "", "flat key=value file; command-line flags win");
  add_options(app, cfg);

  const std::vector<std::pair<std::string, std::pair<std::string, Command>>> commands{
      {"verify", {"solutions, parity verdict, exclusion conditions and Y bound for one pair", cmd_verify}},
      {"scan", {"search every primitive pair with m <= m-max", cmd_scan}},
      {"threshold", {"certify the final inequality fails beyond a threshold", cmd_threshold}},
      {"symbols", {"Jacobi and quartic residue symbols", cmd_symbols}},
      {"laurent", {"two-logarithm lower bound and Laurent condition check", cmd_laurent}},
  };
  for (const auto& [name, desc] : commands) app.add_subcommand(name, desc.first)->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (!cfg.precision_bits) {
    try {
      cfg.precision_bits = precision_from_env();
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitInvalid;
    }
  }

  const CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  const Command* run = nullptr;
  for (const auto& [name, desc] : commands) {
    if (name == cfg.command) run = &desc.second;
  }

  Report report;
  try {
    const auto start = std::chrono::steady_clock::now();
    report = (*run)(cfg, err);
    report.jobs = cfg.jobs;
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  const std::string body = cfg.format == "json" ? report.to_json(!cfg.reproducible).dump(2) + "\n"
                                                : report.to_text();
  if (cfg.output_path.empty()) {
    out << body;
  } else {
    std::ofstream file(cfg.output_path);
    if (!file) {
      err << "error: cannot write " << cfg.output_path << "\n";
      return kExitInvalid;
    }
    file << body;
  }
  for (const auto& w : report.warnings) err << "warning: " << w << "\n";
  return report.exit_code;
}

}  // namespace jeskit::cli
