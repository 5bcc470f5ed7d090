#include <doctest.h>

#include <atomic>
#include <numeric>
#include <random>

#include "jeskit/error.hpp"
#include "jeskit/search.hpp"
#include "support/oracles.hpp"

using namespace jeskit;

namespace {

std::vector<ExponentTriple> sols(const std::vector<SolutionRecord>& recs) {
  std::vector<ExponentTriple> out;
  for (const auto& r : recs) out.push_back(r.sol());
  return out;
}

const std::vector<ExponentTriple> kTrivial{{2, 2, 2}};

}  // namespace

TEST_SUITE("search") {

TEST_CASE("find_solutions examples") {
  CHECK(sols(find_solutions(new_pair(2, 1), 30)) == kTrivial);
  CHECK(sols(find_solutions(new_pair(3, 2), 30)) == kTrivial);
  CHECK(sols(find_solutions(new_pair(13, 4), 40)) == kTrivial);
  CHECK_THROWS_AS(find_solutions(new_pair(2, 1), 1), Error);
}

TEST_CASE("records re-verify the equation") {
  CHECK_NOTHROW(SolutionRecord(new_pair(2, 1), {2, 2, 2}));
  try {
    SolutionRecord(new_pair(2, 1), {2, 2, 3});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
  CHECK_FALSE(SolutionRecord(new_pair(2, 1), {2, 2, 2}).exceptional());
  for (const auto& p : primitive_pairs(12))
    for (const auto& r : find_solutions(p, 25)) CHECK(satisfies(p, r.sol()));
}

TEST_CASE("pruned and unpruned solvers agree for m <= 20, cap 20") {
  int pairs = 0;
  for (const auto& p : primitive_pairs(20)) {
    const auto pruned = sols(find_solutions(p, 20));
    const auto reference = oracle::unpruned_solutions(p, 20);
    if (pruned != reference) FAIL_CHECK("(" << p.m() << ", " << p.n() << ") disagrees");
    ++pairs;
  }
  CHECK(pairs == 86);
}

TEST_CASE("no filter rejects (2,2,2)") {
  for (const auto& p : primitive_pairs(60)) {
    const SolutionFilter f(p, 40);
    CHECK(f.parity_admits_xz(2, 2));
    CHECK(f.parity_admits({2, 2, 2}));
    CHECK(f.residue_admits(2, 2));
  }
}

TEST_CASE("find_solutions_detailed counts") {
  const SearchResult r = find_solutions_detailed(new_pair(13, 4), 40);
  CHECK(sols(r.solutions) == kTrivial);
  CHECK(r.stats.candidates > 0);
  CHECK(r.stats.power_tests < r.stats.candidates);
  CHECK(r.stats.parity_pruned + r.stats.residue_pruned + r.stats.power_tests == r.stats.candidates);
}

TEST_CASE("kl_of examples") {
  for (const auto& p : primitive_pairs(20)) {
    const auto [k, l] = kl_of(p, 1, 1, 1);
    CHECK(k == p.m());
    CHECK(l == p.n());
  }
  const auto [k, l] = kl_of(new_pair(3, 2), 1, 1, 1);
  CHECK((k == 3 && l == 2));
  try {
    kl_of(new_pair(2, 1), 3, 1, 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoPythagoreanStructure);
    CHECK(std::string(e.what()).find("no Pythagorean structure") == 0);
  }
  CHECK_THROWS_AS(kl_of(new_pair(2, 1), 2, 1, 1), Error);
}

TEST_CASE("kl_of succeeds exactly on Pythagorean exponent triples") {
  for (const auto& p : primitive_pairs(14)) {
    const PythTriple t = triple_of(p);
    for (unsigned long X = 1; X <= 5; X += 2)
      for (unsigned long Y = 1; Y <= 5; Y += 2)
        for (unsigned long Z = 1; Z <= 5; Z += 2) {
          const BigInt A = pow(t.a, X), B = pow(t.b, Y), C = pow(t.c, Z);
          const bool pyth = A * A + B * B == C * C;
          bool ok = true;
          try {
            const auto [k, l] = kl_of(p, X, Y, Z);
            CHECK(gcd(k, l) == 1);
            CHECK(mpz_even_p(k.get_mpz_t()) != mpz_even_p(l.get_mpz_t()));
            CHECK(k * k - l * l == A);
            CHECK(k * k + l * l == C);
          } catch (const Error& e) {
            ok = false;
            const bool typed =
                e.kind() == ErrorKind::NoPythagoreanStructure || e.kind() == ErrorKind::MiddleIdentityFails;
            CHECK(typed);
          }
          CHECK(ok == pyth);
        }
  }
}

TEST_CASE("gaussian_root examples") {
  GaussianRoot r = gaussian_root(2, 11, 3);
  CHECK((r.a1 == 2 && r.b1 == 1 && r.c == 5));
  CHECK(r.unit == GaussianInt::one());

  for (const auto& p : primitive_pairs(15)) {
    r = gaussian_root(p.m(), p.n(), 1);
    CHECK((r.a1 == p.m() && r.b1 == p.n()));
    CHECK(r.unit == GaussianInt::one());
  }

  // -2 + 11i = -i (1 + 2i)^3: same representation of 5 up to order, unit != 1.
  r = gaussian_root(-2, 11, 3);
  CHECK(r.c == 5);
  CHECK(((r.a1 == 1 && r.b1 == 2) || (r.a1 == 2 && r.b1 == 1)));
  CHECK_FALSE(r.unit == GaussianInt::one());
  CHECK(r.unit * g_pow(GaussianInt{r.a1, r.b1}, 3) == GaussianInt{-2L, 11L});

  CHECK_THROWS_AS(gaussian_root(3, 4, 3), Error);
  CHECK_THROWS_AS(gaussian_root(4, 2, 1), Error);
}

TEST_CASE("gaussian_root recovers random powers") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const long a = static_cast<long>(rng() % 60) + 1, b = static_cast<long>(rng() % 60) + 1;
    if (std::gcd(a, b) != 1 || (a + b) % 2 == 0) continue;
    const unsigned long Z = 2 * (rng() % 4) + 1;
    const GaussianInt u = GaussianInt::units()[rng() % 4];
    const GaussianInt target = u * g_pow(GaussianInt{a, b}, Z);
    const GaussianRoot r = gaussian_root(target.re(), target.im(), Z);
    CHECK(r.unit * g_pow(GaussianInt{r.a1, r.b1}, Z) == target);
    CHECK(r.c == a * a + b * b);
  }
}

TEST_CASE("structure_checks examples") {
  StructureReport r = structure_checks(2, 1, 3);
  CHECK((r.k == 2 && r.l == 11));
  CHECK(r.all());

  r = structure_checks(3, 2, 3);
  CHECK((r.k == -9 && r.l == 46));
  CHECK(r.all());
  CHECK(val_p(r.k, 3) == 2);

  r = structure_checks(1, 2, 5);
  CHECK((r.k == 41 && r.l == -38));
  CHECK(r.all());

  CHECK_THROWS_AS(structure_checks(2, 4, 3), Error);
  CHECK_THROWS_AS(structure_checks(3, 5, 3), Error);
  CHECK_THROWS_AS(structure_checks(2, 1, 4), Error);
}

TEST_CASE("structure_checks on 500 random instances") {
  std::mt19937_64 rng(500);
  int instances = 0, failures = 0;
  while (instances < 500) {
    const long a1 = static_cast<long>(rng() % 1000) + 1, b1 = static_cast<long>(rng() % 1000) + 1;
    if (a1 * a1 + b1 * b1 > 1000000 || std::gcd(a1, b1) != 1 || (a1 + b1) % 2 == 0) continue;
    const unsigned long Z = 2 * (rng() % 8) + 1;
    const StructureReport r = structure_checks(a1, b1, Z);
    // Independent recomputation of the divisibility facts.
    const GaussianInt g = g_pow(GaussianInt{a1, b1}, Z);
    CHECK(g.re() == r.k);
    CHECK(g.im() == r.l);
    CHECK(g.re() % a1 == 0);
    CHECK(g.im() % b1 == 0);
    const long even = a1 % 2 == 0 ? a1 : b1;
    CHECK(val_p(a1 % 2 == 0 ? g.re() : g.im(), 2) == val_p(even, 2));
    failures += !r.all();
    ++instances;
  }
  CHECK(failures == 0);
}

TEST_CASE("scan_range examples") {
  ScanSummary s = scan_range(5, 10);
  CHECK(s.nontrivial.empty());
  CHECK(s.exceptional_count() == 0);
  CHECK(s.pairs.size() == 6);

  s = scan_range(2, 2);
  REQUIRE(s.pairs.size() == 1);
  CHECK(s.pairs[0].pair == new_pair(2, 1));
  CHECK(sols(s.pairs[0].solutions) == kTrivial);
  CHECK(s.total_solutions == 1);

  CHECK(scan_range(1, 10).pairs.empty());
}

TEST_CASE("scan_range does not depend on the worker count") {
  const ScanSummary one = scan_range(30, 20, {1, {}});
  for (unsigned jobs : {2u, 4u, 7u}) {
    std::atomic<std::size_t> calls{0};
    ScanOptions opts{jobs, [&](std::size_t, std::size_t) { ++calls; }};
    const ScanSummary many = scan_range(30, 20, opts);
    REQUIRE(many.pairs.size() == one.pairs.size());
    for (std::size_t i = 0; i < one.pairs.size(); ++i) {
      CHECK(many.pairs[i].pair == one.pairs[i].pair);
      CHECK(sols(many.pairs[i].solutions) == sols(one.pairs[i].solutions));
    }
    CHECK(many.total_solutions == one.total_solutions);
    CHECK(calls.load() == one.pairs.size());
  }
}

}  // TEST_SUITE
