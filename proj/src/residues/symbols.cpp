#include "jeskit/error.hpp"
#include "jeskit/residues.hpp"

namespace jeskit {

int jacobi(const BigInt& a_in, const BigInt& n_in) {
  if (n_in < 1 || mpz_even_p(n_in.get_mpz_t())) {
    fail(ErrorKind::InvalidArgument, "jacobi symbol needs an odd positive modulus, got " +
                                         to_string(n_in));
  }
  BigInt a = mod(a_in, n_in);
  BigInt n = n_in;
  int result = 1;
  while (a != 0) {
    const unsigned long twos = mpz_scan1(a.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), twos);
    const unsigned long n8 = mod_ui(n, 8);
    if ((twos & 1UL) != 0 && (n8 == 3 || n8 == 5)) result = -result;
    std::swap(a, n);
    if (mod_ui(a, 4) == 3 && mod_ui(n, 4) == 3) result = -result;
    a = mod(a, n);
  }
  return n == 1 ? result : 0;
}

std::string QuarticValue::str() const {
  static const char* const kNames[] = {"1", "i", "-1", "-i"};
  return kNames[k_];
}

std::pair<GaussianInt, GaussianInt> primary_form(const GaussianInt& g) {
  if (mpz_even_p(g.norm().get_mpz_t())) {
    fail(ErrorKind::InvalidArgument, "primary form needs an odd Gaussian integer, got " + g.str());
  }
  const GaussianInt cube = g_pow(GaussianInt{1L, 1L}, 3);  // -2 + 2i
  for (const auto& u : GaussianInt::units()) {
    GaussianInt candidate = u * g;
    if (divides(cube, candidate - GaussianInt::one())) return {u, candidate};
  }
  fail(ErrorKind::Domain, "no primary associate for " + g.str());  // unreachable for odd norm
}

namespace {

GaussianInt pow_mod(GaussianInt base, BigInt e, const GaussianInt& modulus) {
  GaussianInt result = GaussianInt::one();
  base = nearest_remainder(base, modulus);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = nearest_remainder(result * base, modulus);
    mpz_fdiv_q_2exp(e.get_mpz_t(), e.get_mpz_t(), 1);
    if (e > 0) base = nearest_remainder(base * base, modulus);
  }
  return result;
}

// A Gaussian prime above the rational prime p == 1 (mod 4).
GaussianInt prime_above(const BigInt& p) {
  BigInt non_residue = 2;
  while (jacobi(non_residue, p) != -1) ++non_residue;
  BigInt r;
  const BigInt e = (p - 1) / 4;
  mpz_powm(r.get_mpz_t(), non_residue.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  // r^2 == -1 (mod p), so gcd(p, r + i) has norm p.
  return ggcd(GaussianInt(p), GaussianInt{r, BigInt(1)});
}

}  // namespace

QuarticValue quartic_symbol_prime(const GaussianInt& a, const GaussianInt& pi) {
  const BigInt N = pi.norm();
  if (mod_ui(N, 4) != 1) {
    fail(ErrorKind::InvalidArgument, "quartic symbol needs a prime of norm 1 mod 4, got " + pi.str());
  }
  if (divides(pi, a)) {
    fail(ErrorKind::NotInvertible, "non-coprime: " + a.str() + " is divisible by " + pi.str());
  }
  const GaussianInt r = pow_mod(a, (N - 1) / 4, pi);
  const auto& units = GaussianInt::units();
  for (long k = 0; k < 4; ++k) {
    if (divides(pi, r - units[k])) return QuarticValue(k);
  }
  fail(ErrorKind::Domain, "power residue of " + a.str() + " is not a unit modulo " + pi.str() +
                              " (modulus not prime?)");
}

QuarticValue quartic_symbol(const GaussianInt& a, const GaussianInt& modulus,
                            unsigned long trial_limit) {
  const BigInt N = modulus.norm();
  if (N == 0 || mpz_even_p(N.get_mpz_t())) {
    fail(ErrorKind::InvalidArgument, "quartic symbol needs an odd modulus, got " + modulus.str());
  }
  if (!ggcd(a, modulus).is_unit()) {
    fail(ErrorKind::NotInvertible,
         "non-coprime: gcd(" + a.str() + ", " + modulus.str() + ") is not a unit");
  }
  QuarticValue value;
  GaussianInt rest = modulus;
  for (const auto& f : factorize(N, trial_limit)) {
    std::vector<GaussianInt> primes;
    if (mod_ui(f.prime, 4) == 3) {
      primes.emplace_back(f.prime);
    } else {
      const GaussianInt pi = prime_above(f.prime);
      primes = {pi, pi.conj()};
    }
    for (const auto& pi : primes) {
      // Only the conjugate that divides the modulus contributes.
      std::optional<QuarticValue> chi;
      while (auto q = exact_quotient(rest, pi)) {
        if (!chi) chi = quartic_symbol_prime(a, pi);
        rest = *q;
        value = value * *chi;
      }
    }
  }
  if (!rest.is_unit()) fail(ErrorKind::Domain, "incomplete Gaussian factorization of " + modulus.str());
  return value;
}

}  // namespace jeskit
