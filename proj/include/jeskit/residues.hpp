#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jeskit/numerics/gaussian.hpp"
#include "jeskit/numerics/integer.hpp"
#include "jeskit/triples.hpp"

namespace jeskit {

/// Jacobi symbol (a/n) for odd positive n, by the reciprocity reduction.
int jacobi(const BigInt& a, const BigInt& n);

/// A fourth root of unity i^k, k in 0..3.
class QuarticValue {
 public:
  QuarticValue() = default;
  explicit QuarticValue(long k) : k_(static_cast<unsigned>(((k % 4) + 4) % 4)) {}

  unsigned k() const { return k_; }
  GaussianInt as_gaussian() const { return GaussianInt::units()[k_]; }
  bool is_real() const { return k_ % 2 == 0; }
  std::string str() const;

  friend QuarticValue operator*(QuarticValue a, QuarticValue b) {
    return QuarticValue(static_cast<long>(a.k_ + b.k_));
  }
  friend bool operator==(QuarticValue a, QuarticValue b) { return a.k_ == b.k_; }

 private:
  unsigned k_ = 0;
};

/// Returns (u, u*g) with u a unit and u*g == 1 modulo (1+i)^3.
std::pair<GaussianInt, GaussianInt> primary_form(const GaussianInt& g);

/// (a/pi)_4 for a Gaussian prime pi of odd norm: the unit congruent to
/// a^((N(pi)-1)/4) modulo pi.
QuarticValue quartic_symbol_prime(const GaussianInt& a, const GaussianInt& pi);

/// (a/modulus)_4 for odd-norm modulus coprime to a, multiplicative over the
/// Gaussian prime factorization of the modulus (found through its norm).
QuarticValue quartic_symbol(const GaussianInt& a, const GaussianInt& modulus,
                            unsigned long trial_limit = 10'000'000);

enum class ParityKind { YEqZ, YEven, ZEven, XEven, XEqY };

std::string to_string(ParityKind kind);

struct ParityConstraint {
  ParityKind kind;
  std::string rule;    // rule identifier, see rule_statement()
  std::string anchor;  // the statement the rule rests on

  /// Whether exponents (x, y, z) satisfy this constraint.
  bool holds(unsigned long x, unsigned long y, unsigned long z) const;
};

/// Human-readable statement for a rule identifier.
std::string rule_statement(const std::string& rule);

/// Parity rules from the equation reduced modulo m+n, m-n and 4.
std::vector<ParityConstraint> quadratic_sieve(const PrimPair& p);
std::vector<ParityConstraint> quadratic_sieve(const BigInt& m, const BigInt& n);

/// Set of (x mod 2, z mod 2) for which a^x == c^z (mod M) has a solution in
/// positive exponents.
std::set<std::pair<int, int>> parity_feasible(const BigInt& a_res, const BigInt& c_res,
                                              const BigInt& M);

struct DEDecomposition {
  unsigned long alpha = 0;
  BigInt m1, m2, n1, n2;
  unsigned long m1_mod8 = 0, n1_mod8 = 0, n2_mod8 = 0;
  bool e_matches = false;  // E == 2 (m1 n1)^y
  bool d_matches = false;  // D == 2^((alpha+1)y-1) (m2 n2)^y
};

struct PrimeResidueClaim {
  BigInt base;                 // n (or m) in base^(2|Z-X|) + 1
  std::vector<BigInt> primes;  // odd prime factors found
  bool complete = false;       // cofactor fully factored
  bool all_one_mod_8 = true;
};

struct DESplit {
  BigInt D;
  BigInt E;
  BigInt gcd_DE;
  unsigned long E_mod4 = 0;
  unsigned long val2_D = 0;
  bool product_is_b_pow_y = false;
  std::optional<DEDecomposition> decomposition;
  PrimeResidueClaim n_claim;
  PrimeResidueClaim m_claim;
};

/// D = c^Z + a^X and E = c^Z - a^X with diagnostics. X and Z must be odd.
DESplit split_DE(const BigInt& m, const BigInt& n, unsigned long X, unsigned long Z,
                 unsigned long y);
DESplit split_DE(const PrimPair& p, unsigned long X, unsigned long Z, unsigned long y);

/// Odd prime factors of base^(2k) + 1 found by trial division up to `limit`.
PrimeResidueClaim prime_residue_claim(const BigInt& base, unsigned long k,
                                      unsigned long limit = 100'000);

struct QuarticChain {
  GaussianInt modulus;  // n - m i
  QuarticValue of_i;
  QuarticValue of_minus_one;
  QuarticValue of_two;
  QuarticValue of_2n2;
  QuarticValue of_2m2i;
};

QuarticChain quartic_chain(const BigInt& m, const BigInt& n);

struct ParityVerdict {
  bool all_even = false;
  bool applicable = false;
  bool assumed_y_gt_1 = false;
  bool y1_exclusion_cited = false;  // m / n > 56
  std::string case_label;
  std::vector<ParityConstraint> constraints;
  std::optional<QuarticChain> quartic;

  std::vector<std::string> rules() const;
};

/// True iff the constraints admit only x == y == z == 0 (mod 2).
bool forces_all_even(const std::vector<ParityConstraint>& constraints);

struct EngineOptions {
  /// Treat y > 1 as given. Rules that need it set assumed_y_gt_1 on the verdict.
  bool assume_y_gt_1 = true;
};

/// Parity analysis for 4 | m. Throws Precondition when val_2(m) < 2.
ParityVerdict parity_engine(const BigInt& m, const BigInt& n, EngineOptions opts = {});
ParityVerdict parity_engine(const PrimPair& p, EngineOptions opts = {});

}  // namespace jeskit
