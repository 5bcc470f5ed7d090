#include <algorithm>
#include <array>
#include <map>

#include "jeskit/error.hpp"
#include "jeskit/residues.hpp"

namespace jeskit {

std::string to_string(ParityKind kind) {
  switch (kind) {
    case ParityKind::YEqZ: return "y ≡ z (mod 2)";
    case ParityKind::YEven: return "y even";
    case ParityKind::ZEven: return "z even";
    case ParityKind::XEven: return "x even";
    case ParityKind::XEqY: return "x ≡ y (mod 2)";
  }
  return "?";
}

bool ParityConstraint::holds(unsigned long x, unsigned long y, unsigned long z) const {
  switch (kind) {
    case ParityKind::YEqZ: return (y - z) % 2 == 0;
    case ParityKind::YEven: return y % 2 == 0;
    case ParityKind::ZEven: return z % 2 == 0;
    case ParityKind::XEven: return x % 2 == 0;
    case ParityKind::XEqY: return (x - y) % 2 == 0;
  }
  return false;
}

std::string rule_statement(const std::string& rule) {
  static const std::map<std::string, std::string> kStatements{
      {"mod4", "m even: (-n^2)^x ≡ (n^2)^z (mod 4), n odd ⇒ x even"},
      {"jacobi-sum-5",
       "(-2/(m+n))^y = (2/(m+n))^z with m+n ≡ 5 (mod 8) ⇒ y ≡ z (mod 2)"},
      {"jacobi-sum-7", "(-2/(m+n))^y = (2/(m+n))^z with m+n ≡ 7 (mod 8) ⇒ y even"},
      {"jacobi-sum-3", "(-2/(m+n))^y = (2/(m+n))^z with m+n ≡ 3 (mod 8) ⇒ z even"},
      {"jacobi-diff-5", "(2/(m-n))^y = (2/(m-n))^z with m-n ≡ 5 (mod 8) ⇒ y ≡ z (mod 2)"},
      {"quartic-chain",
       "(2n^2/(n-mi))_4^x = (-(2m^2 i)^y/(n-mi))_4 with (2n^2/(n-mi))_4 = (2m^2 i/(n-mi))_4 = -1 "
       "and (-1/(n-mi))_4 = 1 ⇒ (-1)^x = (-1)^y"},
      {"mod16", "4 | m, b^y ≡ 0 (mod 16): a^x ≡ c^z (mod 16), e.g. 7^x ≡ 9^z ⇒ exponent parities"},
      {"de-split",
       "c^Z - a^X = 2 m1^y n1^y, c^Z + a^X = 2^((α+1)y-1) m2^y n2^y with m1 ≡ 1, n1 ≡ 5 (mod 8) "
       "⇒ 1 ≡ (m1 n1)^y (mod 8) ⇒ y even"},
  };
  auto it = kStatements.find(rule);
  return it == kStatements.end() ? std::string("unknown rule") : it->second;
}

namespace {

ParityConstraint make_constraint(ParityKind kind, const std::string& rule) {
  return {kind, rule, rule_statement(rule)};
}

}  // namespace

std::vector<ParityConstraint> quadratic_sieve(const BigInt& m, const BigInt& n) {
  check_generator(m, n);
  std::vector<ParityConstraint> out;
  if (mpz_even_p(m.get_mpz_t())) out.push_back(make_constraint(ParityKind::XEven, "mod4"));

  // Modulo m+n: a vanishes, b ≡ -2n^2, c ≡ 2n^2.
  const BigInt sum = m + n;
  const int minus_two = jacobi(-2, sum);
  const int two = jacobi(2, sum);
  switch (mod_ui(sum, 8)) {
    case 5:
      if (minus_two == -1 && two == -1) out.push_back(make_constraint(ParityKind::YEqZ, "jacobi-sum-5"));
      break;
    case 7:
      if (minus_two == -1 && two == 1) out.push_back(make_constraint(ParityKind::YEven, "jacobi-sum-7"));
      break;
    case 3:
      if (minus_two == 1 && two == -1) out.push_back(make_constraint(ParityKind::ZEven, "jacobi-sum-3"));
      break;
    default:
      break;
  }

  // Modulo m-n: a vanishes, b ≡ c ≡ 2n^2.
  const BigInt diff = m - n;
  if (mod_ui(diff, 8) == 5) {
    BigInt abs_diff = diff;
    mpz_abs(abs_diff.get_mpz_t(), diff.get_mpz_t());
    if (jacobi(2, abs_diff) == -1) out.push_back(make_constraint(ParityKind::YEqZ, "jacobi-diff-5"));
  }
  return out;
}

std::vector<ParityConstraint> quadratic_sieve(const PrimPair& p) {
  return quadratic_sieve(p.m(), p.n());
}

std::set<std::pair<int, int>> parity_feasible(const BigInt& a_res, const BigInt& c_res,
                                              const BigInt& M) {
  if (M < 2) fail(ErrorKind::InvalidArgument, "parity_feasible requires M >= 2");
  // Walk the orbit of (base^e mod M, e mod 2) from e = 1 until a state
  // repeats; the orbit is then complete.
  auto orbit = [&](const BigInt& base) {
    std::array<std::set<BigInt>, 2> by_parity;
    std::set<std::pair<BigInt, int>> seen;
    const BigInt b = mod(base, M);
    BigInt v = b;
    int parity = 1;
    while (seen.emplace(v, parity).second) {
      by_parity[parity].insert(v);
      v = mod(v * b, M);
      parity ^= 1;
    }
    return by_parity;
  };
  const auto xs = orbit(a_res);
  const auto zs = orbit(c_res);
  std::set<std::pair<int, int>> out;
  for (int px = 0; px < 2; ++px) {
    for (int pz = 0; pz < 2; ++pz) {
      const bool meet = std::any_of(xs[px].begin(), xs[px].end(),
                                    [&](const BigInt& v) { return zs[pz].count(v) != 0; });
      if (meet) out.emplace(px, pz);
    }
  }
  return out;
}

PrimeResidueClaim prime_residue_claim(const BigInt& base, unsigned long k, unsigned long limit) {
  PrimeResidueClaim claim;
  claim.base = base;
  BigInt value = pow(base, 2 * k) + 1;
  while (mpz_even_p(value.get_mpz_t())) value /= 2;
  for (unsigned long p = 3; p <= limit && value > 1; p += 2) {
    if (mpz_divisible_ui_p(value.get_mpz_t(), p) == 0) continue;
    claim.primes.emplace_back(p);
    while (mpz_divisible_ui_p(value.get_mpz_t(), p) != 0) value /= p;
    if (p % 8 != 1) claim.all_one_mod_8 = false;
  }
  if (value > 1 && BigInt(limit) * limit > value) {
    claim.primes.push_back(value);
    if (mod_ui(value, 8) != 1) claim.all_one_mod_8 = false;
    value = 1;
  }
  claim.complete = value == 1;
  return claim;
}

DESplit split_DE(const BigInt& m, const BigInt& n, unsigned long X, unsigned long Z,
                 unsigned long y) {
  if (X % 2 == 0 || Z % 2 == 0) {
    fail(ErrorKind::InvalidArgument, "split_DE needs odd X and Z (got X=" + std::to_string(X) +
                                         ", Z=" + std::to_string(Z) + ")");
  }
  check_generator(m, n);
  const BigInt a = m * m - n * n;
  const BigInt b = 2 * m * n;
  const BigInt c = m * m + n * n;
  const BigInt cz = pow(c, Z);
  const BigInt ax = pow(a, X);

  DESplit s;
  s.D = cz + ax;
  s.E = cz - ax;
  s.gcd_DE = gcd(s.D, s.E);
  s.E_mod4 = mod_ui(s.E, 4);
  s.val2_D = s.D == 0 ? 0 : val_p(s.D, 2);
  s.product_is_b_pow_y = s.D * s.E == pow(b, y);

  if (s.product_is_b_pow_y && mpz_even_p(m.get_mpz_t()) && y > 0) {
    DEDecomposition d;
    d.alpha = val_p(m, 2);
    BigInt m_odd;
    mpz_fdiv_q_2exp(m_odd.get_mpz_t(), m.get_mpz_t(), d.alpha);
    const BigInt half_E = s.E / 2;
    auto m1 = exact_root(gcd(half_E, pow(m_odd, y)), y);
    auto n1 = exact_root(gcd(half_E, pow(n, y)), y);
    if (m1 && n1) {
      d.m1 = *m1;
      d.n1 = *n1;
      d.m2 = m_odd / d.m1;
      d.n2 = n / d.n1;
      d.m1_mod8 = mod_ui(d.m1, 8);
      d.n1_mod8 = mod_ui(d.n1, 8);
      d.n2_mod8 = mod_ui(d.n2, 8);
      d.e_matches = s.E == 2 * pow(d.m1 * d.n1, y);
      BigInt two_power = 1;
      const unsigned long shift = (d.alpha + 1) * y - 1;
      mpz_mul_2exp(two_power.get_mpz_t(), two_power.get_mpz_t(), shift);
      d.d_matches = s.D == two_power * pow(d.m2 * d.n2, y);
      s.decomposition = d;
    }
  }

  const unsigned long gap = X > Z ? X - Z : Z - X;
  // n^(2(Z-X)) ≡ -1 modulo primes of m1 and m^(2(Z-X)) ≡ -1 modulo primes of n2.
  s.n_claim = prime_residue_claim(n, gap);
  s.m_claim = prime_residue_claim(m, gap);
  return s;
}

DESplit split_DE(const PrimPair& p, unsigned long X, unsigned long Z, unsigned long y) {
  return split_DE(p.m(), p.n(), X, Z, y);
}

QuarticChain quartic_chain(const BigInt& m, const BigInt& n) {
  QuarticChain q;
  q.modulus = GaussianInt{n, -m};
  q.of_i = quartic_symbol(GaussianInt::i(), q.modulus);
  q.of_minus_one = quartic_symbol(GaussianInt{-1L, 0L}, q.modulus);
  q.of_two = quartic_symbol(GaussianInt{2L, 0L}, q.modulus);
  q.of_2n2 = quartic_symbol(GaussianInt(2 * n * n), q.modulus);
  q.of_2m2i = quartic_symbol(GaussianInt{BigInt(0), 2 * m * m}, q.modulus);
  return q;
}

bool forces_all_even(const std::vector<ParityConstraint>& constraints) {
  for (unsigned v = 1; v < 8; ++v) {
    const unsigned long x = v & 1U, y = (v >> 1) & 1U, z = (v >> 2) & 1U;
    const bool admitted = std::all_of(constraints.begin(), constraints.end(),
                                      [&](const ParityConstraint& c) { return c.holds(x, y, z); });
    if (admitted) return false;
  }
  return true;
}

std::vector<std::string> ParityVerdict::rules() const {
  std::vector<std::string> out;
  for (const auto& c : constraints) {
    if (std::find(out.begin(), out.end(), c.rule) == out.end()) out.push_back(c.rule);
  }
  return out;
}

namespace {

bool has_kind(const std::vector<ParityConstraint>& cs, ParityKind kind) {
  return std::any_of(cs.begin(), cs.end(), [&](const ParityConstraint& c) { return c.kind == kind; });
}

// a^x ≡ c^z (mod 16) once b^y vanishes modulo 16.
bool apply_mod16(const BigInt& m, const BigInt& n, unsigned long alpha, const EngineOptions& opts,
                 ParityVerdict& v) {
  // val_2(b^y) = y (alpha + 1) >= 4 needs y >= 2 when alpha == 2.
  if (alpha < 3 && !has_kind(v.constraints, ParityKind::YEven)) {
    if (!opts.assume_y_gt_1) return false;
    v.assumed_y_gt_1 = true;
  }
  const auto feasible = parity_feasible(m * m - n * n, m * m + n * n, BigInt(16));
  const bool x_even = std::all_of(feasible.begin(), feasible.end(), [](auto p) { return p.first == 0; });
  const bool z_even = std::all_of(feasible.begin(), feasible.end(), [](auto p) { return p.second == 0; });
  if (x_even) v.constraints.push_back(make_constraint(ParityKind::XEven, "mod16"));
  if (z_even) v.constraints.push_back(make_constraint(ParityKind::ZEven, "mod16"));
  return x_even || z_even;
}

void apply_quartic(const BigInt& m, const BigInt& n, ParityVerdict& v) {
  QuarticChain q = quartic_chain(m, n);
  // Modulo n - mi: a ≡ -2n^2 and b ≡ 2m^2 i, so
  // (-1)_4^x (2n^2)_4^x = (-1)_4 (2m^2 i)_4^y.
  if (q.of_minus_one == QuarticValue(0) && q.of_2n2 == QuarticValue(2) &&
      q.of_2m2i == QuarticValue(2)) {
    v.constraints.push_back(make_constraint(ParityKind::XEqY, "quartic-chain"));
  }
  v.quartic = q;
}

void apply_de_split(const BigInt& m, const BigInt& n, const EngineOptions& opts, ParityVerdict& v) {
  // The D/E relation modulo 8 needs 2^((alpha+1)y-2) ≡ 0 (mod 8), i.e. y > 1.
  if (!opts.assume_y_gt_1) return;
  v.assumed_y_gt_1 = true;
  // With m1 ≡ 1 and n1 ≡ n ≡ 5 (mod 8): 1 ≡ 5^y (mod 8).
  const BigInt n1_class = mod(n, BigInt(8));
  const auto feasible = parity_feasible(BigInt(1), n1_class, BigInt(8));
  const bool y_even = std::all_of(feasible.begin(), feasible.end(), [](auto p) { return p.second == 0; });
  (void)m;
  if (y_even) v.constraints.push_back(make_constraint(ParityKind::YEven, "de-split"));
}

}  // namespace

ParityVerdict parity_engine(const BigInt& m, const BigInt& n, EngineOptions opts) {
  check_generator(m, n);
  if (mpz_odd_p(m.get_mpz_t()) || val_p(m, 2) < 2) {
    fail(ErrorKind::Precondition, "engine requires 4 | m (m = " + to_string(m) + ")");
  }
  const unsigned long alpha = val_p(m, 2);
  const unsigned long n8 = mod_ui(n, 8);

  ParityVerdict v;
  v.y1_exclusion_cited = m > 56 * n;
  v.constraints = quadratic_sieve(m, n);

  enum class Case { Quartic, Mod16, Mod16DE, SieveOnly, None };
  Case c = Case::None;
  if (n8 == 1 && alpha == 2) {
    c = Case::Quartic;
    v.case_label = "4||m, n ≡ 1 (mod 8)";
  } else if (n8 == 3) {
    c = Case::Mod16;
    v.case_label = "4|m, n ≡ 3 (mod 8)";
  } else if (n8 == 5) {
    c = Case::Mod16DE;
    v.case_label = "4|m, n ≡ 5 (mod 8)";
  } else if (n8 == 7 && alpha == 2) {
    c = Case::SieveOnly;
    v.case_label = "4||m, n ≡ 7 (mod 8)";
  } else {
    v.case_label = alpha == 2 ? "4||m, n ≡ " + std::to_string(n8) + " (mod 8): no parity chain"
                              : "8|m, n ≡ " + std::to_string(n8) + " (mod 8): no parity chain";
  }
  v.applicable = c != Case::None;

  auto settled = [&] { return forces_all_even(v.constraints); };
  if (v.applicable && !settled()) {
    switch (c) {
      case Case::Quartic:
        apply_quartic(m, n, v);
        break;
      case Case::Mod16:
        apply_mod16(m, n, alpha, opts, v);
        break;
      case Case::Mod16DE:
        apply_mod16(m, n, alpha, opts, v);
        if (!settled()) apply_de_split(m, n, opts, v);
        break;
      case Case::SieveOnly:
      case Case::None:
        break;
    }
  }
  v.all_even = v.applicable && settled();
  return v;
}

ParityVerdict parity_engine(const PrimPair& p, EngineOptions opts) {
  return parity_engine(p.m(), p.n(), opts);
}

}  // namespace jeskit
