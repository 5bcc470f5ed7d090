#include "jeskit/numerics/integer.hpp"

#include <algorithm>
#include <cctype>

#include "jeskit/error.hpp"

namespace jeskit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::NotOrdered: return "not ordered";
    case ErrorKind::NotCoprime: return "not coprime";
    case ErrorKind::SameParity: return "both odd/even";
    case ErrorKind::ProfileUndefined: return "profile undefined";
    case ErrorKind::NotInvertible: return "not coprime to modulus";
    case ErrorKind::FactorizationLimit: return "factorization limit exceeded";
    case ErrorKind::NoPythagoreanStructure: return "no Pythagorean structure";
    case ErrorKind::MiddleIdentityFails: return "middle identity fails";
    case ErrorKind::NotAPower: return "not a perfect power";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::Inapplicable: return "bound inapplicable";
  }
  return "unknown";
}

unsigned long val_p(const BigInt& n, const BigInt& p) {
  if (n == 0) fail(ErrorKind::Domain, "valuation of zero undefined");
  if (p < 2) fail(ErrorKind::InvalidArgument, "valuation base must be >= 2");
  BigInt rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::optional<unsigned long> perfect_power_exponent(const BigInt& N, const BigInt& base) {
  if (N < 1) fail(ErrorKind::InvalidArgument, "perfect_power_exponent requires N >= 1");
  if (base < 2) fail(ErrorKind::InvalidArgument, "perfect_power_exponent requires base >= 2");
  BigInt rest;
  const unsigned long y = mpz_remove(rest.get_mpz_t(), N.get_mpz_t(), base.get_mpz_t());
  if (rest != 1 || y == 0) return std::nullopt;
  return y;
}

BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::optional<BigInt> exact_root(const BigInt& N, unsigned long k) {
  if (k == 0) fail(ErrorKind::InvalidArgument, "root of order zero");
  if (N < 0) return std::nullopt;
  BigInt r;
  if (mpz_root(r.get_mpz_t(), N.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

unsigned long mod_ui(const BigInt& a, unsigned long m) {
  return mpz_fdiv_ui(a.get_mpz_t(), m);
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<PrimeFactor> factorize(BigInt n, unsigned long trial_limit) {
  if (n == 0) fail(ErrorKind::Domain, "cannot factor zero");
  if (n < 0) n = -n;
  std::vector<PrimeFactor> out;
  auto strip = [&](unsigned long d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d) == 0) return;
    PrimeFactor f{BigInt(d), 0};
    while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
      ++f.exponent;
    }
    out.push_back(f);
  };
  strip(2);
  unsigned long d = 3;
  for (; d <= trial_limit; d += 2) {
    if (n == 1) break;
    if (BigInt(d) * d > n) break;
    strip(d);
  }
  if (n > 1) {
    const bool proven = BigInt(d) * d > n;
    if (!proven && !is_probable_prime(n)) {
      fail(ErrorKind::FactorizationLimit,
           "factorization timeout: cofactor " + to_string(n) + " has no factor below " +
               std::to_string(trial_limit));
    }
    out.push_back({n, 1});
  }
  return out;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

BigInt parse_bigint(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char ch) { return std::isspace(ch); }),
          t.end());
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  BigInt v;
  if (t.empty() || v.set_str(t, 10) != 0) {
    fail(ErrorKind::InvalidArgument, "not an integer: '" + text + "'");
  }
  return v;
}

}  // namespace jeskit
