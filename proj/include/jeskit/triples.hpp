#pragma once

#include <optional>
#include <vector>

#include "jeskit/numerics/integer.hpp"

namespace jeskit {

/// Generator pair (m, n) of a primitive Pythagorean triple:
/// m > n >= 1, gcd(m, n) = 1 and m, n of opposite parity.
class PrimPair {
 public:
  /// Validating constructor; see new_pair.
  PrimPair(BigInt m, BigInt n);

  const BigInt& m() const { return m_; }
  const BigInt& n() const { return n_; }
  bool m_is_even() const { return mpz_even_p(m_.get_mpz_t()) != 0; }
  const BigInt& even_member() const { return m_is_even() ? m_ : n_; }
  const BigInt& odd_member() const { return m_is_even() ? n_ : m_; }

  friend bool operator==(const PrimPair& a, const PrimPair& b) {
    return a.m_ == b.m_ && a.n_ == b.n_;
  }
  /// Ordered by (m, n).
  friend bool operator<(const PrimPair& a, const PrimPair& b) {
    return a.m_ != b.m_ ? a.m_ < b.m_ : a.n_ < b.n_;
  }

 private:
  BigInt m_;
  BigInt n_;
};

PrimPair new_pair(const BigInt& m, const BigInt& n);

/// Accepts a pair in either order, as in "(n,m)=(4,13)". Errors only when
/// neither ordering is a valid generator pair.
PrimPair normalize_pair(const BigInt& u, const BigInt& v);

/// Checks gcd and parity without requiring m > n. Congruence arguments in
/// the residue engine use this weaker notion.
void check_generator(const BigInt& m, const BigInt& n);

struct PythTriple {
  BigInt a;  // m^2 - n^2
  BigInt b;  // 2mn
  BigInt c;  // m^2 + n^2
};

PythTriple triple_of(const PrimPair& p);

enum class EvenMember { M, N };

/// even member = 2^alpha * i, odd member = 2^beta * j + e, with i, j odd,
/// beta >= 2 and e in {+1, -1}.
struct TwoAdicProfile {
  unsigned long alpha = 0;
  unsigned long beta = 0;
  int e = 0;
  BigInt i;
  BigInt j;
  EvenMember even_member = EvenMember::M;

  BigInt even_value() const;
  BigInt odd_value() const;
};

/// Throws ProfileUndefined when the odd member is 1.
TwoAdicProfile profile_of(const PrimPair& p);

/// True iff c = p^e for a prime p and e >= 1.
bool is_prime_power(const BigInt& c);

struct ExclusionReport {
  TwoAdicProfile profile;
  bool alpha_ge_2 = false;
  bool n_ge_4 = false;
  bool two_alpha_ne_beta_plus_1 = false;
  bool c_not_prime_power = false;
  bool m_minus_n_ge_3 = false;

  bool all() const {
    return alpha_ge_2 && n_ge_4 && two_alpha_ne_beta_plus_1 && c_not_prime_power &&
           m_minus_n_ge_3;
  }
};

ExclusionReport exclusion_conditions(const PrimPair& p);

struct MinCResult {
  std::optional<BigInt> c_min;
  std::vector<PrimPair> pairs;  // sorted by (m, n)

  bool empty() const { return !c_min.has_value(); }
};

/// Smallest c = m^2 + n^2 <= c_limit over pairs passing every exclusion
/// condition, together with all pairs attaining it.
MinCResult min_c_scan(const BigInt& c_limit);

/// All generator pairs with m <= m_max, ordered by (m, n).
std::vector<PrimPair> primitive_pairs(unsigned long m_max);

}  // namespace jeskit
