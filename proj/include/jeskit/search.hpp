#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "jeskit/numerics/gaussian.hpp"
#include "jeskit/numerics/integer.hpp"
#include "jeskit/residues.hpp"
#include "jeskit/triples.hpp"

namespace jeskit {

struct ExponentTriple {
  unsigned long x = 0;
  unsigned long y = 0;
  unsigned long z = 0;

  bool all_even() const { return x % 2 == 0 && y % 2 == 0 && z % 2 == 0; }
  bool is_trivial() const { return x == 2 && y == 2 && z == 2; }
  std::string str() const;

  friend bool operator==(const ExponentTriple& a, const ExponentTriple& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator<(const ExponentTriple& a, const ExponentTriple& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
};

/// True iff a^x + b^y == c^z for the triple of `p`, by exact arithmetic.
bool satisfies(const PrimPair& p, const ExponentTriple& t);

class SolutionRecord {
 public:
  /// Re-verifies the equation; throws Domain if it does not hold.
  SolutionRecord(PrimPair pair, ExponentTriple sol);

  const PrimPair& pair() const { return pair_; }
  const ExponentTriple& sol() const { return sol_; }
  /// All exponents even and not (2,2,2).
  bool exceptional() const { return sol_.all_even() && !sol_.is_trivial(); }

 private:
  PrimPair pair_;
  ExponentTriple sol_;
};

/// The cheap filters used by find_solutions, exposed so tests can check that
/// none of them rejects a genuine solution.
class SolutionFilter {
 public:
  static constexpr std::array<unsigned long, 7> kModuli{16, 3, 5, 7, 11, 13, 17};

  SolutionFilter(const PrimPair& p, unsigned long cap);

  const std::vector<ParityConstraint>& constraints() const { return constraints_; }

  /// Some y parity is compatible with the sieve constraints.
  bool parity_admits_xz(unsigned long x, unsigned long z) const;
  bool parity_admits(const ExponentTriple& t) const;
  /// (c^z - a^x) mod M lies in {b^y mod M : 1 <= y <= cap} for every modulus.
  bool residue_admits(unsigned long x, unsigned long z) const;

 private:
  unsigned long cap_;
  std::vector<ParityConstraint> constraints_;
  // Per modulus: a^x, c^z residues indexed by exponent, and the set of b^y.
  std::vector<std::vector<unsigned long>> a_pows_, c_pows_;
  std::vector<std::vector<bool>> b_hits_;
};

struct SearchStats {
  std::size_t candidates = 0;      // (x, z) with c^z > a^x
  std::size_t parity_pruned = 0;
  std::size_t residue_pruned = 0;
  std::size_t power_tests = 0;
};

struct SearchResult {
  std::vector<SolutionRecord> solutions;  // ordered by (x, y, z)
  SearchStats stats;
};

/// Every solution with 1 <= x, y, z <= cap. Throws InvalidArgument if cap < 2.
std::vector<SolutionRecord> find_solutions(const PrimPair& p, unsigned long cap);
SearchResult find_solutions_detailed(const PrimPair& p, unsigned long cap);

struct PairResult {
  PrimPair pair;
  std::vector<SolutionRecord> solutions;
};

struct ScanSummary {
  unsigned long m_max = 0;
  unsigned long cap = 0;
  std::vector<PairResult> pairs;          // ordered by (m, n)
  std::vector<SolutionRecord> nontrivial; // any solution other than (2,2,2)
  std::size_t total_solutions = 0;

  std::size_t exceptional_count() const;
};

struct ScanOptions {
  unsigned jobs = 1;
  /// Called from worker threads with (done, total); must be thread safe.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// find_solutions over all primitive pairs with m <= m_max. Results do not
/// depend on the number of workers.
ScanSummary scan_range(unsigned long m_max, unsigned long cap, const ScanOptions& opts = {});

/// (k, l) with a^X = k^2 - l^2, b^Y = 2kl, c^Z = k^2 + l^2, k, l > 0.
/// Throws NoPythagoreanStructure or MiddleIdentityFails.
std::pair<BigInt, BigInt> kl_of(const PrimPair& p, unsigned long X, unsigned long Y,
                                unsigned long Z);

struct GaussianRoot {
  BigInt a1;
  BigInt b1;
  GaussianInt unit;
  BigInt c;  // a1^2 + b1^2
};

/// a1, b1 >= 0 and a unit u with u (a1 + b1 i)^Z == k + l i.
GaussianRoot gaussian_root(const BigInt& k, const BigInt& l, unsigned long Z);

struct StructureReport {
  BigInt k;  // Re (a1 + b1 i)^Z
  BigInt l;  // Im (a1 + b1 i)^Z
  bool a1_divides_k = false;
  bool b1_divides_l = false;
  bool quotients_odd = false;
  bool ord2_matches = false;
  bool ordp_matches = false;
  std::vector<std::string> failures;

  bool all() const { return failures.empty(); }
};

StructureReport structure_checks(const BigInt& a1, const BigInt& b1, unsigned long Z);

}  // namespace jeskit
