#include <algorithm>
#include <map>
#include <sstream>

#include "jeskit/cli.hpp"
#include "jeskit/residues.hpp"

#ifndef JESKIT_VERSION
#define JESKIT_VERSION "unknown"
#endif

namespace jeskit::cli {

using nlohmann::ordered_json;

namespace {

std::string anchor_for(const std::string& id) {
  static const std::map<std::string, std::string> kLocal{
      {"y-bound", "Y < ln n / ln 3 or Y < ln(2(m-1)) / ((alpha+1) ln 2)"},
      {"ordering", "exceptional candidates satisfy z < 2x, z < 2y, |x-z| >= 4, "
                   "m > 1.22n => x < z, z < y and c^z < 2 b^y"},
      {"exclusion", "alpha >= 2, n >= 4, 2 alpha != beta + 1, c not a prime power, m - n >= 3"},
      {"sieve", "residue filters: quadratic sieve parities, a^x + b^y == c^z modulo 16, 3, 5, 7, "
                "11, 13, 17, and c^z - a^x an exact power of b"},
      {"laurent", "K(sigma L - 1) ln rho - (D+1) ln N - D(K-1) ln b - gL(R a1 + S a2) > eps(N) "
                  "=> |Lambda'| > rho^(-mu K L)"},
      {"two-log-bound", "ln|Lambda| > -3.741 (ln b' + 6.87)^2 a2 - 31L/15 - ln L - ln(2 + 0.222 L a2), "
                        "L = [45/62 (ln b' + 5.49)] + 1"},
      {"threshold", "(ln m)^q < 7.482 (ln ln 2m + 2.139)^2 (1 + 70/ln 2m) + 31 L'/(15 ln m) + "
                    "(ln(6.29 L') + 0.7 L'^2 (ln m + 70))/ln m, L' = 45/62 ln ln 2m + 1.56"},
      {"jacobi", "Jacobi symbol by quadratic reciprocity"},
      {"quartic", "(a/pi)_4 == a^((N pi - 1)/4) (mod pi), multiplicative in the modulus"},
  };
  auto it = kLocal.find(id);
  return it != kLocal.end() ? it->second : rule_statement(id);
}

void flatten(const ordered_json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    // Intervals print on one line.
    if (j.size() == 2 && j.contains("lo") && j.contains("hi")) {
      os << prefix << ": [" << j["lo"].get<std::string>() << ", " << j["hi"].get<std::string>() << "]\n";
      return;
    }
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    return;
  }
  if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const ordered_json& e) { return e.is_primitive(); });
    if (scalars) {
      os << prefix << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      os << "]\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    return;
  }
  os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

Precision RunConfig::precision_or(Precision fallback) const {
  return precision_bits ? static_cast<Precision>(*precision_bits) : fallback;
}

void Report::add_rule(const std::string& id) {
  for (const auto& r : rules) {
    if (r.id == id) return;
  }
  rules.push_back({id, anchor_for(id)});
}

ordered_json Report::to_json(bool with_execution) const {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = JESKIT_VERSION;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  ordered_json rs = ordered_json::array();
  for (const auto& r : rules) rs.push_back({{"id", r.id}, {"anchor", r.anchor}});
  j["rules"] = rs;
  j["warnings"] = warnings;
  j["exit_code"] = exit_code;
  if (with_execution) j["execution"] = {{"jobs", jobs}, {"wall_time_ms", wall_time_ms}};
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "jeskit " << JESKIT_VERSION << " " << command << "\n";
  flatten(inputs, "input", os);
  flatten(results, "", os);
  if (!rules.empty()) {
    os << "rules:\n";
    for (const auto& r : rules) os << "  " << r.id << ": " << r.anchor << "\n";
  }
  return os.str();
}

ordered_json interval_json(const RInterval& v, int digits) {
  char* lo = nullptr;
  char* hi = nullptr;
  mpfr_asprintf(&lo, "%.*RDg", digits, v.lo());
  mpfr_asprintf(&hi, "%.*RUg", digits, v.hi());
  ordered_json j{{"lo", std::string(lo)}, {"hi", std::string(hi)}};
  mpfr_free_str(lo);
  mpfr_free_str(hi);
  return j;
}

}  // namespace jeskit::cli
