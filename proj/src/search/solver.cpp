#include <algorithm>
#include <atomic>
#include <thread>

#include "jeskit/error.hpp"
#include "jeskit/search.hpp"

namespace jeskit {

std::string ExponentTriple::str() const {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

bool satisfies(const PrimPair& p, const ExponentTriple& t) {
  const PythTriple tr = triple_of(p);
  return pow(tr.a, t.x) + pow(tr.b, t.y) == pow(tr.c, t.z);
}

SolutionRecord::SolutionRecord(PrimPair pair, ExponentTriple sol)
    : pair_(std::move(pair)), sol_(sol) {
  if (sol_.x == 0 || sol_.y == 0 || sol_.z == 0) {
    fail(ErrorKind::InvalidArgument, "exponents must be positive: " + sol_.str());
  }
  if (!satisfies(pair_, sol_)) {
    fail(ErrorKind::Domain, "not a solution: " + sol_.str() + " for (" + to_string(pair_.m()) +
                                ", " + to_string(pair_.n()) + ")");
  }
}

SolutionFilter::SolutionFilter(const PrimPair& p, unsigned long cap)
    : cap_(cap), constraints_(quadratic_sieve(p)) {
  const PythTriple t = triple_of(p);
  for (unsigned long M : kModuli) {
    const unsigned long a = mod_ui(t.a, M), b = mod_ui(t.b, M), c = mod_ui(t.c, M);
    std::vector<unsigned long> ap(cap + 1), cp(cap + 1);
    std::vector<bool> hits(M, false);
    unsigned long av = 1, bv = 1, cv = 1;
    for (unsigned long e = 1; e <= cap; ++e) {
      av = av * a % M;
      bv = bv * b % M;
      cv = cv * c % M;
      ap[e] = av;
      cp[e] = cv;
      hits[bv] = true;
    }
    a_pows_.push_back(std::move(ap));
    c_pows_.push_back(std::move(cp));
    b_hits_.push_back(std::move(hits));
  }
}

bool SolutionFilter::parity_admits_xz(unsigned long x, unsigned long z) const {
  return parity_admits({x, 1, z}) || parity_admits({x, 2, z});
}

bool SolutionFilter::parity_admits(const ExponentTriple& t) const {
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [&](const ParityConstraint& c) { return c.holds(t.x, t.y, t.z); });
}

bool SolutionFilter::residue_admits(unsigned long x, unsigned long z) const {
  if (x == 0 || z == 0 || x > cap_ || z > cap_) return true;
  for (std::size_t k = 0; k < kModuli.size(); ++k) {
    const unsigned long M = kModuli[k];
    const unsigned long diff = (c_pows_[k][z] + M - a_pows_[k][x]) % M;
    if (!b_hits_[k][diff]) return false;
  }
  return true;
}

SearchResult find_solutions_detailed(const PrimPair& p, unsigned long cap) {
  if (cap < 2) fail(ErrorKind::InvalidArgument, "cap must be >= 2, got " + std::to_string(cap));
  const PythTriple t = triple_of(p);
  const SolutionFilter filter(p, cap);

  std::vector<BigInt> c_pows(cap + 1);
  c_pows[0] = 1;
  for (unsigned long z = 1; z <= cap; ++z) c_pows[z] = c_pows[z - 1] * t.c;

  SearchResult out;
  BigInt ax = 1;
  for (unsigned long x = 1; x <= cap; ++x) {
    ax *= t.a;
    for (unsigned long z = 1; z <= cap; ++z) {
      if (c_pows[z] <= ax) continue;
      ++out.stats.candidates;
      if (!filter.parity_admits_xz(x, z)) {
        ++out.stats.parity_pruned;
        continue;
      }
      if (!filter.residue_admits(x, z)) {
        ++out.stats.residue_pruned;
        continue;
      }
      ++out.stats.power_tests;
      const auto y = perfect_power_exponent(c_pows[z] - ax, t.b);
      if (!y || *y > cap) continue;
      const ExponentTriple sol{x, *y, z};
      if (!filter.parity_admits(sol)) continue;
      out.solutions.emplace_back(p, sol);  // re-verifies from scratch
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const SolutionRecord& a, const SolutionRecord& b) { return a.sol() < b.sol(); });
  return out;
}

std::vector<SolutionRecord> find_solutions(const PrimPair& p, unsigned long cap) {
  return find_solutions_detailed(p, cap).solutions;
}

std::size_t ScanSummary::exceptional_count() const {
  return static_cast<std::size_t>(std::count_if(nontrivial.begin(), nontrivial.end(),
                                                [](const SolutionRecord& r) { return r.exceptional(); }));
}

ScanSummary scan_range(unsigned long m_max, unsigned long cap, const ScanOptions& opts) {
  if (cap < 2) fail(ErrorKind::InvalidArgument, "cap must be >= 2, got " + std::to_string(cap));
  ScanSummary summary;
  summary.m_max = m_max;
  summary.cap = cap;
  const std::vector<PrimPair> pairs = m_max >= 2 ? primitive_pairs(m_max) : std::vector<PrimPair>{};

  std::vector<std::vector<SolutionRecord>> slots(pairs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      slots[i] = find_solutions(pairs[i], cap);
      const std::size_t d = ++done;
      if (opts.progress) opts.progress(d, pairs.size());
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(opts.jobs, static_cast<unsigned>(pairs.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (const auto& r : slots[i]) {
      if (!r.sol().is_trivial()) summary.nontrivial.push_back(r);
    }
    summary.total_solutions += slots[i].size();
    summary.pairs.push_back({pairs[i], std::move(slots[i])});
  }
  return summary;
}

}  // namespace jeskit
