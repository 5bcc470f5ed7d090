#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jeskit {

using BigInt = mpz_class;

/// Largest e with p^e | n. Throws Domain for n == 0.
unsigned long val_p(const BigInt& n, const BigInt& p);

/// The exponent y >= 1 with base^y == N, if any. N == 1 has no positive
/// exponent and yields nullopt.
std::optional<unsigned long> perfect_power_exponent(const BigInt& N, const BigInt& base);

BigInt pow(const BigInt& base, unsigned long e);

/// Exact k-th root of a non-negative N, if N is a perfect k-th power.
std::optional<BigInt> exact_root(const BigInt& N, unsigned long k);

inline std::optional<BigInt> exact_sqrt(const BigInt& N) { return exact_root(N, 2); }

BigInt gcd(const BigInt& a, const BigInt& b);

/// Non-negative residue of a modulo m (m > 0).
BigInt mod(const BigInt& a, const BigInt& m);
unsigned long mod_ui(const BigInt& a, unsigned long m);

bool is_probable_prime(const BigInt& n);

struct PrimeFactor {
  BigInt prime;
  unsigned long exponent = 0;
};

/// Trial-division factorization for desk-scale inputs. Divisors are tried up
/// to `trial_limit`; a leftover cofactor is accepted only when it is provably
/// prime (below trial_limit^2) or passes GMP's primality test. Anything else
/// raises FactorizationLimit.
std::vector<PrimeFactor> factorize(BigInt n, unsigned long trial_limit = 10'000'000);

std::string to_string(const BigInt& v);
BigInt parse_bigint(const std::string& text);

}  // namespace jeskit
