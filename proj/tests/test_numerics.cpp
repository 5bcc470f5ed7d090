#include <doctest.h>

#include <random>

#include "jeskit/error.hpp"
#include "jeskit/numerics/gaussian.hpp"
#include "jeskit/numerics/integer.hpp"
#include "jeskit/numerics/interval.hpp"

using namespace jeskit;

TEST_SUITE("numerics") {

TEST_CASE("val_p examples") {
  CHECK(val_p(48, 2) == 4);
  CHECK(val_p(1, 3) == 0);
  CHECK(val_p(343, 7) == 3);
  CHECK(val_p(-96, 2) == 5);
  try {
    val_p(0, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
    CHECK(std::string(e.what()) == "valuation of zero undefined");
  }
}

TEST_CASE("val_p property: p^v divides n and p^(v+1) does not") {
  std::mt19937_64 rng(7);
  const long primes[] = {2, 3, 5, 7, 11, 13, 97};
  for (int trial = 0; trial < 2000; ++trial) {
    const BigInt p = primes[rng() % 7];
    BigInt n = BigInt(static_cast<unsigned long>(rng() % 1000000 + 1)) * pow(p, rng() % 12);
    const unsigned long v = val_p(n, p);
    CHECK(n % pow(p, v) == 0);
    CHECK(n % pow(p, v + 1) != 0);
  }
}

TEST_CASE("perfect_power_exponent examples") {
  CHECK(perfect_power_exponent(32768, 8) == 5UL);
  CHECK_FALSE(perfect_power_exponent(1, 7).has_value());
  CHECK_FALSE(perfect_power_exponent(24, 2).has_value());
  CHECK(perfect_power_exponent(pow(BigInt(104), 37), 104) == 37UL);
  CHECK_FALSE(perfect_power_exponent(pow(BigInt(104), 37) + 1, 104).has_value());
}

TEST_CASE("exact roots, gcd and factorization") {
  CHECK(exact_root(BigInt(125), 3) == BigInt(5));
  CHECK_FALSE(exact_root(BigInt(126), 3).has_value());
  CHECK(gcd(185, 111) == 37);
  const auto f = factorize(BigInt(185));
  REQUIRE(f.size() == 2);
  CHECK(f[0].prime == 5);
  CHECK(f[1].prime == 37);
  CHECK(mod(BigInt(-5), BigInt(8)) == 3);
  CHECK(mod_ui(BigInt(-5), 8) == 3);
}

TEST_CASE("g_pow examples") {
  CHECK(g_pow(GaussianInt{2L, 1L}, 3) == GaussianInt{2L, 11L});
  CHECK(g_pow(GaussianInt{1L, 1L}, 2) == GaussianInt{0L, 2L});
  CHECK(g_pow(GaussianInt{17L, -4L}, 0) == GaussianInt{1L, 0L});
}

TEST_CASE("g_pow properties") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const GaussianInt g{static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 41) - 20};
    const unsigned long a = rng() % 12, b = rng() % 12;
    CHECK(g_pow(g, a + b) == g_pow(g, a) * g_pow(g, b));
    CHECK(g_pow(g, a).norm() == pow(g.norm(), a));
  }
}

TEST_CASE("Gaussian division helpers") {
  const GaussianInt a{2L, 11L}, b{2L, 1L};
  CHECK(exact_quotient(a, b) == GaussianInt{3L, 4L});
  CHECK_FALSE(exact_quotient(a, GaussianInt{3L, 0L}).has_value());
  CHECK(ggcd(GaussianInt{5L, 0L}, GaussianInt{2L, 11L}).norm() == 5);
  const GaussianInt r = nearest_remainder(GaussianInt{97L, 13L}, GaussianInt{9L, -4L});
  CHECK(2 * r.norm() <= GaussianInt{9L, -4L}.norm());
}

TEST_CASE("interval examples") {
  mpfr_t ref;
  mpfr_init2(ref, 256);
  mpfr_set_str(ref, "0.693147180559945309417232121458176568075500134360255254120680", 10, MPFR_RNDN);
  CHECK(ln(RInterval::point(2L)).contains(ref));
  mpfr_clear(ref);

  const RInterval pi = RInterval::pi();
  CHECK(mpfr_cmp_d(pi.lo(), 3.14159265358) >= 0);
  CHECK(mpfr_cmp_d(pi.hi(), 3.14159265360) <= 0);

  CHECK(exp(ln(RInterval::point(5L))).contains(5L));
  CHECK_THROWS_AS(ln(RInterval::point(0L)), Error);
  CHECK_THROWS_AS(RInterval::point(1L) / RInterval::from_doubles(-1, 1), Error);
  CHECK(certainly_less(RInterval::point(1L), RInterval::point(2L)));
  CHECK_FALSE(certainly_less(RInterval::from_doubles(1, 3), RInterval::point(2L)));
}

TEST_CASE("interval containment against 4x precision") {
  // Each function evaluated on a 128-bit enclosure of p/q must contain the
  // 512-bit value of the same function at p/q.
  std::mt19937_64 rng(2024);
  constexpr Precision base = 128, fine = 4 * base;
  mpfr_t x, v;
  mpfr_init2(x, fine);
  mpfr_init2(v, fine);
  int failures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const long p = static_cast<long>(rng() % 2000000) + 1;
    const long q = static_cast<long>(rng() % 1000) + 1;
    const RInterval X = RInterval::rational(p, q, base);
    mpfr_set_si(x, p, MPFR_RNDN);
    mpfr_div_si(x, x, q, MPFR_RNDN);

    mpfr_log(v, x, MPFR_RNDN);
    failures += !ln(X).contains(v);
    mpfr_div_ui(v, x, 1000, MPFR_RNDN);  // keep exp in range
    mpfr_exp(v, v, MPFR_RNDN);
    failures += !exp(X / RInterval::point(1000L, base)).contains(v);
    mpfr_sqrt(v, x, MPFR_RNDN);
    failures += !sqrt(X).contains(v);
    mpfr_set_ui(v, 3, MPFR_RNDN);
    mpfr_div_ui(v, v, 5, MPFR_RNDN);
    mpfr_pow(v, x, v, MPFR_RNDN);
    failures += !pow(X, RInterval::rational(3, 5, base)).contains(v);
    mpfr_mul(v, x, x, MPFR_RNDN);
    mpfr_sub_ui(v, v, 7, MPFR_RNDN);
    mpfr_div(v, v, x, MPFR_RNDN);
    failures += !((X * X - RInterval::point(7L, base)) / X).contains(v);
  }
  mpfr_clear(x);
  mpfr_clear(v);
  CHECK(failures == 0);
}

TEST_CASE("doubling precision never widens an enclosure") {
  for (Precision p = 64; p <= 1024; p *= 2) {
    const RInterval coarse = ln(RInterval::rational(22, 7, p)) * RInterval::pi(p);
    const RInterval finer = ln(RInterval::rational(22, 7, 2 * p)) * RInterval::pi(2 * p);
    CHECK(coarse.contains(finer));
    CHECK(finer.width_d() <= coarse.width_d());
  }
}

TEST_CASE("log factorials") {
  mpfr_t ref;
  mpfr_init2(ref, 200);
  mpfr_set_str(ref, "15.10441257307551529522570932925107037188", 10, MPFR_RNDN);  // ln 10!
  CHECK(ln_factorial(10, 64).contains(ref));
  mpfr_clear(ref);
  // ln(1! 2! 3! 4!) = ln 288
  const RInterval sf = ln_superfactorial(4, 128), direct = ln(BigInt(288), 128);
  CHECK_FALSE(certainly_less(sf, direct));
  CHECK_FALSE(certainly_less(direct, sf));
}

}  // TEST_SUITE
