#include "jeskit/error.hpp"
#include "jeskit/search.hpp"

namespace jeskit {

std::pair<BigInt, BigInt> kl_of(const PrimPair& p, unsigned long X, unsigned long Y,
                                unsigned long Z) {
  if (X % 2 == 0 || Y % 2 == 0 || Z % 2 == 0) {
    fail(ErrorKind::InvalidArgument, "kl_of needs odd X, Y, Z");
  }
  const PythTriple t = triple_of(p);
  const BigInt aX = pow(t.a, X), bY = pow(t.b, Y), cZ = pow(t.c, Z);
  // a and c are odd, so both sums are even.
  const BigInt k2 = (cZ + aX) / 2;
  const BigInt l2 = (cZ - aX) / 2;
  auto describe = [](const char* what, const BigInt& v) {
    return std::string(what) + " = " + to_string(v) + " is not a square";
  };
  const auto k = l2 >= 0 ? exact_sqrt(k2) : std::nullopt;
  if (!k) fail(ErrorKind::NoPythagoreanStructure, "no Pythagorean structure: " + describe("(c^Z+a^X)/2", k2));
  const auto l = l2 >= 0 ? exact_sqrt(l2) : std::nullopt;
  if (!l) fail(ErrorKind::NoPythagoreanStructure, "no Pythagorean structure: " + describe("(c^Z-a^X)/2", l2));
  if (2 * *k * *l != bY) {
    fail(ErrorKind::MiddleIdentityFails, "middle identity fails: 2kl = " + to_string(2 * *k * *l) +
                                             " but b^Y = " + to_string(bY));
  }
  return {*k, *l};
}

GaussianRoot gaussian_root(const BigInt& k, const BigInt& l, unsigned long Z) {
  if (Z == 0) fail(ErrorKind::InvalidArgument, "Z must be positive");
  if (gcd(k, l) != 1) fail(ErrorKind::NotCoprime, "not coprime: gcd(k, l) != 1");
  if (mpz_even_p(k.get_mpz_t()) == mpz_even_p(l.get_mpz_t())) {
    fail(ErrorKind::SameParity, "k and l must have opposite parity");
  }
  const auto c = exact_root(k * k + l * l, Z);
  if (!c) {
    fail(ErrorKind::NotAPower, "k^2 + l^2 = " + to_string(k * k + l * l) + " is not a " +
                                   std::to_string(Z) + "-th power");
  }
  const GaussianInt target{k, l};
  std::vector<std::pair<BigInt, BigInt>> reps;
  for (BigInt a1 = 0; a1 * a1 <= *c; ++a1) {
    if (auto b1 = exact_sqrt(*c - a1 * a1)) reps.emplace_back(a1, *b1);
  }
  const auto& units = GaussianInt::units();
  // Unit 1 first so the identity representation wins when it exists.
  for (const auto& u : {units[0], units[1], units[2], units[3]}) {
    for (const auto& [a1, b1] : reps) {
      if (u * g_pow(GaussianInt{a1, b1}, Z) == target) return {a1, b1, u, *c};
    }
  }
  fail(ErrorKind::Domain, "no representation of " + to_string(*c) + " yields k + l i");
}

StructureReport structure_checks(const BigInt& a1, const BigInt& b1, unsigned long Z) {
  if (a1 == 0 || b1 == 0) fail(ErrorKind::InvalidArgument, "a1 and b1 must be nonzero");
  if (gcd(a1, b1) != 1) fail(ErrorKind::NotCoprime, "not coprime: gcd(a1, b1) != 1");
  if (mpz_even_p(a1.get_mpz_t()) == mpz_even_p(b1.get_mpz_t())) {
    fail(ErrorKind::SameParity, "a1 and b1 must have opposite parity");
  }
  if (Z % 2 == 0) fail(ErrorKind::InvalidArgument, "Z must be odd");

  StructureReport r;
  const GaussianInt g = g_pow(GaussianInt{a1, b1}, Z);
  r.k = g.re();
  r.l = g.im();

  r.a1_divides_k = r.k % a1 == 0;
  r.b1_divides_l = r.l % b1 == 0;
  if (!r.a1_divides_k) r.failures.push_back("a1 does not divide k");
  if (!r.b1_divides_l) r.failures.push_back("b1 does not divide l");
  r.quotients_odd = r.a1_divides_k && r.b1_divides_l && mpz_odd_p(BigInt(r.k / a1).get_mpz_t()) &&
                    mpz_odd_p(BigInt(r.l / b1).get_mpz_t());
  if (!r.quotients_odd) r.failures.push_back("k/a1 or l/b1 is not odd");

  const bool a1_even = mpz_even_p(a1.get_mpz_t()) != 0;
  const BigInt& even_base = a1_even ? a1 : b1;
  const BigInt& even_part = a1_even ? r.k : r.l;
  r.ord2_matches = even_part != 0 && val_p(even_part, 2) == val_p(even_base, 2);
  if (!r.ord2_matches) r.failures.push_back("ord_2 of the even component differs from its base");

  r.ordp_matches = true;
  const BigInt Zb(Z);
  for (const auto& [base, part] : {std::pair{a1, r.k}, std::pair{b1, r.l}}) {
    BigInt abs_base = base;
    mpz_abs(abs_base.get_mpz_t(), base.get_mpz_t());
    if (abs_base == 1) continue;
    for (const auto& f : factorize(abs_base)) {
      if (f.prime == 2) continue;
      if (part == 0 || val_p(part, f.prime) != f.exponent + val_p(Zb, f.prime)) {
        r.ordp_matches = false;
        r.failures.push_back("ord_" + to_string(f.prime) + " identity fails");
      }
    }
  }
  return r;
}

}  // namespace jeskit
