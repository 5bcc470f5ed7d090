#include "jeskit/bounds.hpp"
#include "jeskit/error.hpp"

namespace jeskit {

YUpperBound y_upper_bound(const PrimPair& p, Precision prec) {
  const TwoAdicProfile prof = profile_of(p);
  const RInterval ln2 = RInterval::ln2(prec);
  YUpperBound out;
  out.via_n = ln(p.n(), prec) / ln(BigInt(3), prec);
  out.via_m = ln(BigInt(2 * (p.m() - 1)), prec) /
              (RInterval::point(static_cast<long>(prof.alpha + 1), prec) * ln2);
  out.bound = min(out.via_n, out.via_m);
  out.exclusive_cap = mpfr_get_ui(out.bound.hi(), MPFR_RNDU);  // ceiling
  return out;
}

OrderingReport ordering_predicates(const PrimPair& p, const ExponentTriple& t) {
  OrderingReport r;
  if (t.is_trivial()) {
    r.skipped = true;
    r.skip_reason = "(2,2,2) is not exceptional";
    return r;
  }
  if (!t.all_even()) {
    r.skipped = true;
    r.skip_reason = "exponents not all even";
    return r;
  }
  const PythTriple tr = triple_of(p);
  const unsigned long gap = t.x > t.z ? t.x - t.z : t.z - t.x;
  r.z_lt_2x = t.z < 2 * t.x;
  r.z_lt_2y = t.z < 2 * t.y;
  r.gap_ge_4 = gap >= 4;
  r.ratio_gives_x_lt_z = !(100 * p.m() > 122 * p.n()) || t.x < t.z;
  r.z_lt_y = t.z < t.y;
  r.c_pow_lt_2b_pow = pow(tr.c, t.z) < 2 * pow(tr.b, t.y);

  auto note = [&](bool ok, const char* what) {
    if (!ok) r.failures.emplace_back(what);
  };
  note(r.z_lt_2x, "z < 2x");
  note(r.z_lt_2y, "z < 2y");
  note(r.gap_ge_4, "|x - z| >= 4");
  note(r.ratio_gives_x_lt_z, "m > 1.22n implies x < z");
  note(r.z_lt_y, "z < y");
  note(r.c_pow_lt_2b_pow, "c^z < 2 b^y");
  return r;
}

RInterval delta_lower(const PrimPair& p, Precision prec) {
  if (p.n() < 2) fail(ErrorKind::InvalidArgument, "delta_lower needs n >= 2");
  return ln(p.m(), prec) / ln(p.n(), prec);
}

bool congruence_origin_holds(const PrimPair& p, unsigned long x, unsigned long z) {
  const PythTriple t = triple_of(p);
  const BigInt modulus = t.b * t.b;
  BigInt cx, cz;
  mpz_powm_ui(cx.get_mpz_t(), t.c.get_mpz_t(), x, modulus.get_mpz_t());
  mpz_powm_ui(cz.get_mpz_t(), t.c.get_mpz_t(), z, modulus.get_mpz_t());
  return cx == cz;
}

bool power_congruence_holds(const PrimPair& p, unsigned long x) {
  const PythTriple t = triple_of(p);
  const BigInt modulus = t.b * t.b;
  BigInt ax, cx;
  mpz_powm_ui(ax.get_mpz_t(), t.a.get_mpz_t(), x, modulus.get_mpz_t());
  mpz_powm_ui(cx.get_mpz_t(), t.c.get_mpz_t(), x, modulus.get_mpz_t());
  return ax == cx;
}

}  // namespace jeskit
