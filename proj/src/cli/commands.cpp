#include <fstream>
#include <mutex>
#include <ostream>
#include <regex>

#include "jeskit/bounds.hpp"
#include "jeskit/cli.hpp"
#include "jeskit/error.hpp"
#include "jeskit/residues.hpp"
#include "jeskit/search.hpp"

namespace jeskit::cli {

using nlohmann::ordered_json;

namespace {

BigInt require_int(const std::optional<std::string>& v, const char* flag) {
  if (!v) fail(ErrorKind::InvalidArgument, std::string("missing --") + flag);
  return parse_bigint(*v);
}

GaussianInt parse_gaussian(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return GaussianInt(parse_bigint(text));
  return {parse_bigint(text.substr(0, comma)), parse_bigint(text.substr(comma + 1))};
}

/// "1e50000" or "10^50000" -> 50000.
BigInt parse_power_of_ten(const std::string& text) {
  static const std::regex kForm(R"(^\s*(?:1[eE]|10\^)\+?(\d+)\s*$)");
  std::smatch match;
  if (!std::regex_match(text, match, kForm)) {
    fail(ErrorKind::InvalidArgument, "expected a power of ten such as 1e50000 or 10^50000, got '" + text + "'");
  }
  return parse_bigint(match[1].str());
}

ordered_json triple_json(const ExponentTriple& t) { return ordered_json::array({t.x, t.y, t.z}); }

ordered_json verdict_json(const ParityVerdict& v) {
  ordered_json j;
  j["applicable"] = v.applicable;
  j["case"] = v.case_label;
  j["all_even"] = v.all_even;
  j["assumed_y_gt_1"] = v.assumed_y_gt_1;
  j["y1_exclusion_cited"] = v.y1_exclusion_cited;
  ordered_json cs = ordered_json::array();
  for (const auto& c : v.constraints) cs.push_back({{"kind", to_string(c.kind)}, {"rule", c.rule}});
  j["constraints"] = cs;
  if (v.quartic) {
    const QuarticChain& q = *v.quartic;
    j["quartic"] = {{"modulus", q.modulus.str()},     {"i", q.of_i.str()},
                    {"-1", q.of_minus_one.str()},     {"2", q.of_two.str()},
                    {"2n^2", q.of_2n2.str()},         {"2m^2 i", q.of_2m2i.str()}};
  }
  return j;
}

ordered_json pair_json(const PrimPair& p) { return {{"m", to_string(p.m())}, {"n", to_string(p.n())}}; }

}  // namespace

Report cmd_verify(const RunConfig& cfg, std::ostream& /*err*/) {
  Report r;
  r.command = "verify";
  const BigInt mu = require_int(cfg.m, "m");
  const BigInt nu = require_int(cfg.n, "n");
  const PrimPair p = normalize_pair(mu, nu);
  if (p.m() != mu) r.warnings.push_back("inputs reordered to (m, n) = (" + to_string(p.m()) + ", " + to_string(p.n()) + ")");
  r.inputs = {{"m", to_string(p.m())}, {"n", to_string(p.n())}, {"cap", cfg.cap}};

  const PythTriple t = triple_of(p);
  r.results["triple"] = {{"a", to_string(t.a)}, {"b", to_string(t.b)}, {"c", to_string(t.c)}};

  const SearchResult sr = find_solutions_detailed(p, cfg.cap);
  r.add_rule("sieve");
  ordered_json sols = ordered_json::array();
  std::size_t nontrivial = 0;
  for (const auto& rec : sr.solutions) {
    const OrderingReport ord = ordering_predicates(p, rec.sol());
    if (!rec.sol().is_trivial()) ++nontrivial;
    ordered_json s{{"exponents", triple_json(rec.sol())}, {"exceptional", rec.exceptional()}};
    s["ordering"] = ord.skipped ? ordered_json{{"skipped", ord.skip_reason}}
                                : ordered_json{{"excluded", ord.excluded()}, {"failures", ord.failures}};
    sols.push_back(s);
  }
  if (nontrivial > 0) r.add_rule("ordering");
  r.results["solutions"] = sols;
  r.results["nontrivial_count"] = nontrivial;
  r.results["search_stats"] = {{"candidates", sr.stats.candidates},
                               {"parity_pruned", sr.stats.parity_pruned},
                               {"residue_pruned", sr.stats.residue_pruned},
                               {"power_tests", sr.stats.power_tests}};

  try {
    const ExclusionReport ex = exclusion_conditions(p);
    r.results["profile"] = {{"alpha", ex.profile.alpha}, {"beta", ex.profile.beta}, {"e", ex.profile.e},
                            {"i", to_string(ex.profile.i)}, {"j", to_string(ex.profile.j)}};
    r.results["exclusion"] = {{"alpha_ge_2", ex.alpha_ge_2},
                              {"n_ge_4", ex.n_ge_4},
                              {"two_alpha_ne_beta_plus_1", ex.two_alpha_ne_beta_plus_1},
                              {"c_not_prime_power", ex.c_not_prime_power},
                              {"m_minus_n_ge_3", ex.m_minus_n_ge_3},
                              {"all", ex.all()}};
    r.add_rule("exclusion");
    const YUpperBound yb = y_upper_bound(p);
    r.results["y_bound"] = {{"via_n", interval_json(yb.via_n)},
                            {"via_m", interval_json(yb.via_m)},
                            {"bound", interval_json(yb.bound)},
                            {"exclusive_cap", yb.exclusive_cap}};
    r.add_rule("y-bound");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ProfileUndefined) throw;
    r.results["profile"] = {{"defined", false}, {"reason", e.what()}};
  }

  if (mpz_divisible_ui_p(p.m().get_mpz_t(), 4) != 0) {
    const ParityVerdict v = parity_engine(p, EngineOptions{cfg.assume_y_gt_1});
    r.results["parity"] = verdict_json(v);
    for (const auto& id : v.rules()) r.add_rule(id);
  } else {
    r.results["parity"] = {{"applicable", false}, {"reason", "4 does not divide m"}};
  }
  if (nontrivial > 0) r.exit_code = kExitFailure;
  return r;
}

Report cmd_scan(const RunConfig& cfg, std::ostream& err) {
  Report r;
  r.command = "scan";
  r.inputs = {{"m_max", cfg.m_max}, {"cap", cfg.cap}};
  if (cfg.m_max < 2) r.warnings.push_back("m_max < 2: no primitive pairs to scan");

  ScanOptions opts;
  opts.jobs = cfg.jobs;
  std::mutex io;
  std::size_t last_decile = 0;
  if (cfg.progress) {
    opts.progress = [&](std::size_t done, std::size_t total) {
      const std::size_t decile = done * 10 / total;
      std::lock_guard lock(io);
      if (decile > last_decile || done == total) {
        last_decile = decile;
        err << "scan: " << done << "/" << total << " pairs\n";
      }
    };
  }
  const ScanSummary s = scan_range(cfg.m_max, cfg.cap, opts);
  r.add_rule("sieve");

  ordered_json nontrivial = ordered_json::array();
  for (const auto& rec : s.nontrivial) {
    ordered_json j = pair_json(rec.pair());
    j["exponents"] = triple_json(rec.sol());
    j["exceptional"] = rec.exceptional();
    nontrivial.push_back(j);
  }
  r.results["pairs_scanned"] = s.pairs.size();
  r.results["total_solutions"] = s.total_solutions;
  r.results["nontrivial"] = nontrivial;
  r.results["exceptional_count"] = s.exceptional_count();

  if (!cfg.csv_path.empty()) {
    std::ofstream csv(cfg.csv_path);
    if (!csv) fail(ErrorKind::InvalidArgument, "cannot write " + cfg.csv_path);
    csv << "m,n,a,b,c,solutions,nontrivial\n";
    for (const auto& pr : s.pairs) {
      const PythTriple t = triple_of(pr.pair);
      std::string sols;
      std::size_t count = 0;
      for (const auto& rec : pr.solutions) {
        sols += (sols.empty() ? "" : ";") + rec.sol().str();
        if (!rec.sol().is_trivial()) ++count;
      }
      csv << to_string(pr.pair.m()) << ',' << to_string(pr.pair.n()) << ',' << to_string(t.a) << ','
          << to_string(t.b) << ',' << to_string(t.c) << ",\"" << sols << "\"," << count << "\n";
    }
    r.results["csv"] = cfg.csv_path;
  }
  if (!s.nontrivial.empty()) r.exit_code = kExitFailure;
  return r;
}

Report cmd_threshold(const RunConfig& cfg, std::ostream& err) {
  Report r;
  r.command = "threshold";
  ThresholdForm form;
  BigInt published;
  if (cfg.theorem == "1.2") {
    form = ThresholdForm::ThreeFifths;
    published = 109948;
  } else if (cfg.theorem == "1.3") {
    form = ThresholdForm::TwoThirds;
    published = 22933;
  } else {
    fail(ErrorKind::InvalidArgument, "theorem must be 1.2 or 1.3, got '" + cfg.theorem + "'");
  }
  const Precision prec = cfg.precision_or(kCertificationPrecision);
  const BigInt k = cfg.at ? parse_power_of_ten(*cfg.at) : published;
  r.inputs = {{"theorem", cfg.theorem}, {"form", to_string(form)}, {"log10_m", to_string(k)},
              {"precision_bits", prec}};

  const ThresholdCert cert = certify_threshold(form, ln_power_of_ten(k, prec), prec);
  r.add_rule("threshold");
  r.results["verdict"] = cert.verdict;
  r.results["t0"] = interval_json(cert.t0);
  r.results["lhs_at_t0"] = interval_json(cert.lhs_at_t0);
  r.results["rhs_at_t0"] = interval_json(cert.rhs_at_t0);
  r.results["derivative_pieces"] = cert.checked_at.size();
  if (cert.verdict) r.results["tail_from"] = interval_json(cert.tail_from);
  if (cert.failure) r.results["failure"] = *cert.failure;

  const Crossover cross = crossover(form, prec);
  r.results["crossover"] = {{"t", interval_json(cross.t)}, {"log10_m", interval_json(cross.log10m)}};
  if (!cert.verdict) {
    r.exit_code = kExitFailure;
    err << "certification failed: " << cert.failure.value_or("unknown") << "\n";
  }
  return r;
}

Report cmd_symbols(const RunConfig& cfg, std::ostream& /*err*/) {
  Report r;
  r.command = "symbols";
  bool any = false;
  if (cfg.jacobi) {
    any = true;
    const BigInt a = parse_bigint(*cfg.jacobi);
    const BigInt n = require_int(cfg.modulus, "mod");
    r.inputs["jacobi"] = to_string(a);
    r.inputs["mod"] = to_string(n);
    r.results["jacobi"] = jacobi(a, n);
    r.add_rule("jacobi");
  }
  if (cfg.quartic) {
    any = true;
    if (!cfg.modulus) fail(ErrorKind::InvalidArgument, "missing --mod");
    const GaussianInt a = parse_gaussian(*cfg.quartic);
    const GaussianInt mod = parse_gaussian(*cfg.modulus);
    r.inputs["quartic"] = a.str();
    r.inputs["mod"] = mod.str();
    const QuarticValue v = quartic_symbol(a, mod);
    r.results["quartic"] = v.str();
    r.results["quartic_k"] = v.k();
    r.add_rule("quartic");
  }
  if (cfg.primary) {
    any = true;
    const GaussianInt g = parse_gaussian(*cfg.primary);
    r.inputs["primary"] = g.str();
    const auto [unit, form] = primary_form(g);
    r.results["primary"] = {{"unit", unit.str()}, {"primary", form.str()}};
  }
  if (!any) fail(ErrorKind::InvalidArgument, "symbols needs --jacobi, --quartic or --primary");
  return r;
}

Report cmd_laurent(const RunConfig& cfg, std::ostream& /*err*/) {
  Report r;
  r.command = "laurent";
  const Precision prec = cfg.precision_or(kDefaultPrecision);
  if (!cfg.a2 || !cfg.bprime) fail(ErrorKind::InvalidArgument, "laurent needs --a2 and --bprime");
  const RInterval a2 = RInterval::decimal(*cfg.a2, prec);
  const RInterval bprime = RInterval::decimal(*cfg.bprime, prec);
  r.inputs = {{"a2", *cfg.a2}, {"bprime", *cfg.bprime}, {"precision_bits", prec}};

  const CorBound cb = cor_lower_bound(a2, bprime, prec);
  r.add_rule("two-log-bound");
  r.results["L"] = cb.L;
  r.results["L_formula"] = cb.L_formula;
  r.results["L_floor_activated"] = cb.floor_activated;
  r.results["log_lambda_lower"] = interval_json(cb.log_lambda_lower);

  const LemmaConstants lc = lemma_constants(prec);
  r.results["constants"] = {{"coefficient_3741", interval_json(lc.coefficient)},
                            {"sqrt_kappa_0222", interval_json(lc.sqrt_kappa)},
                            {"epsilon_33091", interval_json(lc.epsilon_33091)}};

  if (cfg.b1 || cfg.b2) {
    const BigInt b1 = require_int(cfg.b1, "b1");
    const BigInt b2 = require_int(cfg.b2, "b2");
    const unsigned long L = cfg.L.value_or(cb.L);
    r.inputs["b1"] = to_string(b1);
    r.inputs["b2"] = to_string(b2);
    r.inputs["L"] = L;
    const LaurentInstance inst = lemma_instance(a2, b1, b2, L, prec);
    const LaurentResult lr = laurent_check(inst);
    r.add_rule("laurent");
    r.results["instance"] = {{"K", inst.K},   {"L", inst.L},   {"R1", inst.R1}, {"R2", inst.R2},
                             {"S1", inst.S1}, {"S2", inst.S2}, {"N", inst.N()}};
    r.results["check"] = {{"ok", lr.ok},
                          {"margin", interval_json(lr.margin)},
                          {"epsilon", interval_json(lr.epsilon)},
                          {"log_bound", interval_json(lr.log_bound)},
                          {"gL_shortcut_holds", lr.gL_shortcut_holds},
                          {"ln_b_shortcut_holds", lr.ln_b_shortcut_holds},
                          {"max_factor_shortcut_holds", lr.max_factor_shortcut_holds}};
    if (!lr.ok) r.exit_code = kExitFailure;
  }
  return r;
}

}  // namespace jeskit::cli
