// Acceptance gate: `jeskit_acceptance N` checks criterion N (or all with no
// argument) and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "jeskit/bounds.hpp"
#include "jeskit/residues.hpp"
#include "jeskit/search.hpp"
#include "support/oracles.hpp"

using namespace jeskit;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<ExponentTriple> sols(const std::vector<SolutionRecord>& recs) {
  std::vector<ExponentTriple> out;
  for (const auto& r : recs) out.push_back(r.sol());
  return out;
}

const std::vector<ExponentTriple> kTrivial{{2, 2, 2}};

// 1. Classical triples have only (2,2,2) up to cap 40.
void criterion_1(Outcome& o) {
  const auto start = Clock::now();
  const std::pair<long, long> pairs[] = {{2, 1}, {3, 2}, {4, 3}, {5, 4}, {6, 5}};
  for (const auto& [m, n] : pairs) {
    const PrimPair p = new_pair(m, n);
    const PythTriple t = triple_of(p);
    const bool only = sols(find_solutions(p, 40)) == kTrivial;
    o.require(only, "(" + to_string(t.a) + "," + to_string(t.b) + "," + to_string(t.c) + ")");
  }
  const double secs = seconds_since(start);
  o.require(secs < 10, "runtime under 10 s");
  o.detail << "5 triples, cap 40, each exactly {(2,2,2)}; " << secs << " s";
}

// 2. Exhaustive scan m <= 60, cap 40, and pruned/unpruned agreement.
void criterion_2(Outcome& o) {
  const auto start = Clock::now();
  const ScanSummary s = scan_range(60, 40, {8, {}});
  const double scan_secs = seconds_since(start);
  o.require(s.nontrivial.empty(), "no solution besides (2,2,2)");
  std::size_t trivial_pairs = 0;
  for (const auto& pr : s.pairs) trivial_pairs += sols(pr.solutions) == kTrivial;
  o.require(trivial_pairs == s.pairs.size(), "every pair has exactly (2,2,2)");

  std::size_t compared = 0, disagree = 0;
  for (const auto& p : primitive_pairs(20)) {
    ++compared;
    disagree += sols(find_solutions(p, 20)) != oracle::unpruned_solutions(p, 20);
  }
  o.require(disagree == 0, "pruned and unpruned solvers agree");
  const double secs = seconds_since(start);
  o.require(secs < 300, "runtime under 5 min");
  o.detail << s.pairs.size() << " pairs, " << s.nontrivial.size() << " nontrivial, scan " << scan_secs
           << " s with 8 workers; pruned vs unpruned on " << compared << " pairs: " << disagree
           << " disagreements";
}

// 3. Smallest c passing every exclusion condition.
void criterion_3(Outcome& o) {
  const MinCResult r = min_c_scan(1000);
  const bool exact = r.c_min && *r.c_min == 185 && r.pairs.size() == 2 && r.pairs[0] == new_pair(11, 8) &&
                     r.pairs[1] == new_pair(13, 4);
  o.require(exact, "(185, {(13,4),(11,8)})");
  o.detail << "c_min = " << (r.c_min ? to_string(*r.c_min) : "none") << ", pairs:";
  for (const auto& p : r.pairs) o.detail << " (" << p.m() << "," << p.n() << ")";
}

// 4. Jacobi and quartic symbols against independent oracles; live chain values.
void criterion_4(Outcome& o) {
  long jacobi_cases = 0, jacobi_bad = 0;
  for (long n = 3; n < 2000; n += 2)
    for (long a = 0; a < n; ++a) {
      ++jacobi_cases;
      jacobi_bad += jacobi(a, n) != oracle::jacobi_by_squares(a, n);
    }
  o.require(jacobi_bad == 0, "jacobi matches the square oracle");

  std::mt19937_64 rng(20240601);
  int primes = 0, inert = 0, quartic_cases = 0, quartic_bad = 0;
  while (primes < 100) {
    // About one in five moduli is an inert rational prime q ≡ 3 (mod 4).
    const bool want_inert = primes % 5 == 4;
    const long p = want_inert ? static_cast<long>(rng() % 995) + 3 : static_cast<long>(rng() % 999990) + 5;
    if (!oracle::is_small_prime(p) || p % 4 != (want_inert ? 3 : 1)) continue;
    GaussianInt pi;
    if (want_inert) {
      pi = primary_form(GaussianInt{p, 0L}).second;
      ++inert;
    } else {
      long re = 0, im = 0;
      for (long s = 1; s * s < p && re == 0; ++s) {
        const long r = p - s * s;
        const long q = std::lround(std::sqrt(static_cast<double>(r)));
        if (q * q == r) {
          re = s;
          im = q;
        }
      }
      pi = primary_form(GaussianInt{re, im}).second;
    }
    ++primes;
    for (int trial = 0; trial < 10; ++trial) {
      const long ar = static_cast<long>(rng() % 2001) - 1000, ai = static_cast<long>(rng() % 2001) - 1000;
      const unsigned expect = want_inert ? oracle::quartic_inert(ar, ai, p)
                                         : oracle::quartic_via_field(ar, ai, pi.re().get_si(), pi.im().get_si());
      if (expect == 99) continue;
      ++quartic_cases;
      quartic_bad += quartic_symbol(GaussianInt{ar, ai}, pi).k() != expect;
    }
  }
  o.require(quartic_bad == 0, "quartic symbol matches definitional exponentiation");

  int chain_pairs = 0, chain_bad = 0;
  for (const auto& p : primitive_pairs(200)) {
    if (!p.m_is_even() || val_p(p.m(), 2) != 2 || mod_ui(p.n(), 8) != 1) continue;
    ++chain_pairs;
    const QuarticChain q = quartic_chain(p.m(), p.n());
    chain_bad += !(q.of_i == QuarticValue(0) && q.of_minus_one == QuarticValue(0) && q.of_two == QuarticValue(2));
  }
  o.require(chain_bad == 0, "(i)=1, (-1)=1, (2)=-1 modulo n - mi");
  o.detail << "jacobi " << jacobi_cases << " cases/" << jacobi_bad << " mismatches; quartic " << quartic_cases
           << " cases over " << primes << " primary primes (" << inert << " inert)/" << quartic_bad
           << " mismatches; chain values on " << chain_pairs << " pairs/" << chain_bad << " mismatches";
}

std::vector<std::string> expected_chain(unsigned long alpha, unsigned long n8) {
  if (alpha == 2) {
    switch (n8) {
      case 1: return {"mod4", "jacobi-sum-5", "quartic-chain"};
      case 3: return {"mod4", "jacobi-sum-7", "mod16"};
      case 5: return {"mod4", "mod16", "de-split"};
      case 7: return {"mod4", "jacobi-sum-3", "jacobi-diff-5"};
    }
  } else {
    switch (n8) {
      case 3: return {"mod4", "jacobi-sum-3", "jacobi-diff-5"};
      case 5: return {"mod4", "jacobi-sum-5", "mod16"};
    }
  }
  return {};
}

// 5. Parity engine verdicts and the mod 16 rule.
void criterion_5(Outcome& o) {
  int matched = 0, wrong = 0, unmatched = 0, soundness_checks = 0, unsound = 0;
  for (const auto& p : primitive_pairs(120)) {
    if (!p.m_is_even() || val_p(p.m(), 2) < 2) continue;
    const auto expect = expected_chain(val_p(p.m(), 2), mod_ui(p.n(), 8));
    const ParityVerdict v = parity_engine(p);
    if (expect.empty()) {
      ++unmatched;
      wrong += v.applicable;
    } else {
      ++matched;
      if (!v.all_even || v.rules() != expect) {
        ++wrong;
        if (wrong <= 3) o.detail << "(" << p.m() << "," << p.n() << ") ";
      }
    }
    for (const auto& rec : find_solutions(p, 30)) {
      if (rec.sol().y <= 1) continue;
      for (const auto& c : v.constraints) {
        ++soundness_checks;
        unsound += !c.holds(rec.sol().x, rec.sol().y, rec.sol().z);
      }
    }
  }
  o.require(wrong == 0, "all-even verdict with the expected rule chain");
  o.require(unsound == 0, "constraints hold on found solutions");
  const bool mod16 = parity_feasible(7, 9, 16) == std::set<std::pair<int, int>>{{0, 0}};
  o.require(mod16, "parity_feasible(7, 9, 16) = {(even, even)}");
  o.detail << matched << " pairs in a case, " << wrong << " wrong; " << unmatched
           << " pairs outside every case; " << soundness_checks << " soundness checks, " << unsound
           << " violations; (7,9,16) -> " << (mod16 ? "{(even,even)}" : "other");
}

// 6. Gaussian structure on random instances.
void criterion_6(Outcome& o) {
  std::mt19937_64 rng(6);
  int instances = 0, failures = 0;
  std::string first;
  while (instances < 500) {
    const long a1 = static_cast<long>(rng() % 1000) + 1, b1 = static_cast<long>(rng() % 1000) + 1;
    if (a1 * a1 + b1 * b1 > 1000000 || std::gcd(a1, b1) != 1 || (a1 + b1) % 2 == 0) continue;
    const unsigned long Z = 2 * (rng() % 8) + 1;
    const StructureReport r = structure_checks(a1, b1, Z);
    const bool ok = r.all() && r.a1_divides_k && r.b1_divides_l && r.ord2_matches && r.ordp_matches;
    if (!ok && first.empty())
      first = "(" + std::to_string(a1) + "," + std::to_string(b1) + "," + std::to_string(Z) + ")";
    failures += !ok;
    ++instances;
  }
  o.require(failures == 0, "structure checks on every instance" + (first.empty() ? "" : " first " + first));
  o.detail << instances << " instances (a1^2+b1^2 <= 10^6, odd Z <= 15), " << failures << " failures";
}

// 7. Constants of the two-logarithm bound.
void criterion_7(Outcome& o) {
  const LemmaConstants c = lemma_constants();
  const double coef = c.coefficient.lo_d(), sk = c.sqrt_kappa.lo_d();
  o.require(std::abs(coef - 3.741) <= 0.001, "3.741 within 0.001");
  o.require(std::abs(sk - 0.222) <= 0.0005, "0.222 within 0.0005");
  o.require(mpfr_cmp_d(c.epsilon_33091.hi(), 0.0011) < 0, "eps(33091) < 0.0011");
  // K and N are increasing in a2, so the smallest admissible a2 decides.
  const RInterval a2 = RInterval::point(1000L) + lemma_a1();
  const KNValues kn = lemma_k_n(3, a2);
  o.require(kn.K >= 11030, "K >= 11030 at a2 = 1000 + a1");
  o.require(kn.N > 33090, "N > 33090 at a2 = 1000 + a1");
  o.detail << "coefficient " << coef << ", sqrt(kappa) " << sk << ", eps(33091) < "
           << c.epsilon_33091.hi_d() << "; L = 3, a2 = 1000 + a1: K = " << kn.K << ", N = " << kn.N;
}

// 8. Threshold certification and crossover brackets.
void criterion_8(Outcome& o) {
  const auto start = Clock::now();
  const ThresholdCert a = certify_threshold(ThresholdForm::ThreeFifths, ln_power_of_ten(109948, 256), 256);
  const ThresholdCert b = certify_threshold(ThresholdForm::TwoThirds, ln_power_of_ten(22933, 256), 256);
  o.require(a.verdict, "t^(3/5) certified from 10^109948");
  o.require(b.verdict, "t^(2/3) certified from 10^22933");
  const Crossover ca = crossover(ThresholdForm::ThreeFifths, 256);
  const Crossover cb = crossover(ThresholdForm::TwoThirds, 256);
  o.require(ca.log10m.lo_d() >= 95000 && ca.log10m.hi_d() <= 109948, "3/5 crossover in [95000, 109948]");
  o.require(cb.log10m.lo_d() >= 19000 && cb.log10m.hi_d() <= 22933, "2/3 crossover in [19000, 22933]");
  const double secs = seconds_since(start);
  o.require(secs < 60, "runtime under 60 s");
  o.detail << "verdicts " << a.verdict << "/" << b.verdict << "; crossover log10 m in [" << ca.log10m.lo_d()
           << ", " << ca.log10m.hi_d() << "] and [" << cb.log10m.lo_d() << ", " << cb.log10m.hi_d() << "]; "
           << secs << " s";
}

// 9. Identities and filter safety.
void criterion_9(Outcome& o) {
  std::mt19937_64 rng(9);
  const auto pool = primitive_pairs(1000);
  int identity_bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const PrimPair& p = pool[rng() % pool.size()];
    const PythTriple t = triple_of(p);
    identity_bad += t.c * t.c - t.a * t.a != t.b * t.b;
    for (unsigned long x = 2; x <= 40; x += 2) identity_bad += !power_congruence_holds(p, x);
  }
  o.require(identity_bad == 0, "c^2 - a^2 = b^2 and a^x ≡ c^x (mod b^2)");

  int scanned = 0, rejected = 0;
  for (const auto& p : primitive_pairs(60)) {
    ++scanned;
    const SolutionFilter f(p, 40);
    rejected += ordering_predicates(p, {2, 2, 2}).excluded();
    rejected += !f.parity_admits({2, 2, 2}) || !f.residue_admits(2, 2);
  }
  o.require(rejected == 0, "no filter excludes (2,2,2)");
  o.detail << "100 random pairs, even x <= 40: " << identity_bad << " failures; " << scanned
           << " scanned pairs: " << rejected << " rejections of (2,2,2)";
}

const std::function<void(Outcome&)> kCriteria[] = {criterion_1, criterion_2, criterion_3,
                                                    criterion_4, criterion_5, criterion_6,
                                                    criterion_7, criterion_8, criterion_9};

bool run(int n) {
  Outcome o;
  try {
    kCriteria[n - 1](o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "[exception: " << e.what() << "]";
  }
  std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail.str() << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n < 1 || n > 9) {
      std::cerr << "usage: jeskit_acceptance [1-9 ...]\n";
      return 2;
    }
    which.push_back(n);
  }
  if (which.empty())
    for (int n = 1; n <= 9; ++n) which.push_back(n);
  bool all = true;
  for (int n : which) all = run(n) && all;
  return all ? 0 : 1;
}
