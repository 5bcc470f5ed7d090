#include "jeskit/triples.hpp"

#include <algorithm>

#include "jeskit/error.hpp"

namespace jeskit {

namespace {

bool is_even(const BigInt& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

}  // namespace

void check_generator(const BigInt& m, const BigInt& n) {
  if (m < 1 || n < 1) {
    fail(ErrorKind::NotOrdered, "not ordered: generator entries must be positive");
  }
  if (gcd(m, n) != 1) {
    fail(ErrorKind::NotCoprime, "not coprime: gcd(" + to_string(m) + ", " + to_string(n) +
                                    ") = " + to_string(gcd(m, n)));
  }
  if (is_even(m) == is_even(n)) {
    fail(ErrorKind::SameParity, std::string("both ") + (is_even(m) ? "even" : "odd") + ": (" +
                                    to_string(m) + ", " + to_string(n) + ")");
  }
}

PrimPair::PrimPair(BigInt m, BigInt n) : m_(std::move(m)), n_(std::move(n)) {
  if (n_ < 1) fail(ErrorKind::NotOrdered, "not ordered: n must be >= 1");
  if (m_ <= n_) {
    fail(ErrorKind::NotOrdered, "not ordered: m = " + to_string(m_) + " <= n = " + to_string(n_));
  }
  check_generator(m_, n_);
}

PrimPair new_pair(const BigInt& m, const BigInt& n) { return PrimPair(m, n); }

PrimPair normalize_pair(const BigInt& u, const BigInt& v) {
  if (u > v) return PrimPair(u, v);
  if (v > u) return PrimPair(v, u);
  fail(ErrorKind::NotOrdered, "not ordered in either order: (" + to_string(u) + ", " +
                                  to_string(v) + ")");
}

PythTriple triple_of(const PrimPair& p) {
  const BigInt m2 = p.m() * p.m();
  const BigInt n2 = p.n() * p.n();
  PythTriple t{m2 - n2, 2 * p.m() * p.n(), m2 + n2};
  if (t.a * t.a + t.b * t.b != t.c * t.c) {
    fail(ErrorKind::Domain, "triple identity failed");  // unreachable for valid pairs
  }
  return t;
}

BigInt TwoAdicProfile::even_value() const {
  BigInt v = i;
  mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), alpha);
  return v;
}

BigInt TwoAdicProfile::odd_value() const {
  BigInt v = j;
  mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), beta);
  return v + e;
}

TwoAdicProfile profile_of(const PrimPair& p) {
  const BigInt& even = p.even_member();
  const BigInt& odd = p.odd_member();
  if (odd == 1) {
    fail(ErrorKind::ProfileUndefined,
         "profile undefined: the odd member of (" + to_string(p.m()) + ", " + to_string(p.n()) +
             ") is 1");
  }
  TwoAdicProfile prof;
  prof.even_member = p.m_is_even() ? EvenMember::M : EvenMember::N;
  prof.alpha = val_p(even, 2);
  mpz_fdiv_q_2exp(prof.i.get_mpz_t(), even.get_mpz_t(), prof.alpha);

  // Odd numbers are +-1 mod 4; pick e so that odd - e is divisible by 4.
  prof.e = mod_ui(odd, 4) == 1 ? 1 : -1;
  const BigInt shifted = odd - prof.e;
  prof.beta = val_p(shifted, 2);
  mpz_fdiv_q_2exp(prof.j.get_mpz_t(), shifted.get_mpz_t(), prof.beta);
  return prof;
}

bool is_prime_power(const BigInt& c) {
  if (c < 2) fail(ErrorKind::InvalidArgument, "is_prime_power requires c >= 2");
  const unsigned long max_e = mpz_sizeinbase(c.get_mpz_t(), 2);
  for (unsigned long e = 1; e <= max_e; ++e) {
    auto r = exact_root(c, e);
    if (r && *r >= 2 && is_probable_prime(*r)) return true;
  }
  return false;
}

ExclusionReport exclusion_conditions(const PrimPair& p) {
  ExclusionReport r;
  r.profile = profile_of(p);
  r.alpha_ge_2 = r.profile.alpha >= 2;
  r.n_ge_4 = p.n() >= 4;
  r.two_alpha_ne_beta_plus_1 = 2 * r.profile.alpha != r.profile.beta + 1;
  r.c_not_prime_power = !is_prime_power(triple_of(p).c);
  r.m_minus_n_ge_3 = p.m() - p.n() >= 3;
  return r;
}

MinCResult min_c_scan(const BigInt& c_limit) {
  if (c_limit < 2) fail(ErrorKind::InvalidArgument, "min_c_scan requires c_limit >= 2");
  MinCResult best;
  // n >= 4 is one of the conditions, so pairs with n < 4 never qualify and
  // their profiles (possibly undefined for n = 1) are not needed.
  for (BigInt n = 4; n * n + (n + 3) * (n + 3) <= c_limit; ++n) {
    for (BigInt m = n + 3; m * m + n * n <= c_limit; ++m) {
      if (gcd(m, n) != 1 || is_even(m) == is_even(n)) continue;
      const PrimPair pair(m, n);
      if (!exclusion_conditions(pair).all()) continue;
      const BigInt c = m * m + n * n;
      if (!best.c_min || c < *best.c_min) {
        best.c_min = c;
        best.pairs.clear();
      }
      if (c == *best.c_min) best.pairs.push_back(pair);
    }
  }
  std::sort(best.pairs.begin(), best.pairs.end());
  return best;
}

std::vector<PrimPair> primitive_pairs(unsigned long m_max) {
  std::vector<PrimPair> out;
  for (unsigned long m = 2; m <= m_max; ++m) {
    for (unsigned long n = 1; n < m; ++n) {
      if (((m ^ n) & 1UL) == 0) continue;
      if (gcd(BigInt(m), BigInt(n)) != 1) continue;
      out.emplace_back(BigInt(m), BigInt(n));
    }
  }
  return out;
}

}  // namespace jeskit
