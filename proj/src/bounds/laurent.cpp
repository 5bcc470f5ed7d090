#include <algorithm>

#include "jeskit/bounds.hpp"
#include "jeskit/error.hpp"

namespace jeskit {

namespace {

RInterval dec(const char* text, Precision prec) { return RInterval::decimal(text, prec); }
RInterval pt(unsigned long v, Precision prec) { return RInterval::point(BigInt(v), prec); }

unsigned long floor_exact(const RInterval& v, const char* what) {
  const auto [lo, hi] = v.floor_range();
  if (lo != hi) {
    fail(ErrorKind::Domain, std::string("floor of ") + what + " undecided at " +
                                std::to_string(v.precision()) + " bits: " + v.str());
  }
  if (lo < 0) fail(ErrorKind::Domain, std::string(what) + " is negative");
  return lo.get_ui();
}

RInterval rho_of(Precision prec) { return exp(dec("3.1", prec)); }

}  // namespace

RInterval epsilon_N(unsigned long N, Precision prec) {
  if (N < 2) fail(ErrorKind::InvalidArgument, "epsilon_N needs N >= 2");
  const RInterval n = pt(N, prec);
  const RInterval lnN = ln(BigInt(N), prec);
  const RInterval two_pi = RInterval::point(2L, prec) * RInterval::pi(prec);
  const RInterval e = exp(RInterval::point(1L, prec));
  const RInterval ratio_pow = exp(n * ln((e - RInterval::point(1L, prec)) / e));
  RInterval sum = RInterval::rational(3, 2, prec) * lnN + RInterval::rational(1, 2, prec) * ln(two_pi) +
                  RInterval::rational(1, BigInt(12) * N, prec) +
                  ln(RInterval::point(1L, prec) + ratio_pow);
  return RInterval::point(2L, prec) * sum / n;
}

RInterval epsilon_exact(unsigned long N, Precision prec) {
  if (N < 2) fail(ErrorKind::InvalidArgument, "epsilon_exact needs N >= 2");
  const RInterval n = pt(N, prec);
  const RInterval one = RInterval::point(1L, prec);
  const RInterval e = exp(one);
  // ln(e^N + (e-1)^N) = N + ln(1 + ((e-1)/e)^N)
  const RInterval tail = n + ln(one + exp(n * ln((e - one) / e)));
  const RInterval inner = ln_factorial(N, prec) - pt(N - 1, prec) * ln(BigInt(N), prec) + tail;
  return RInterval::point(2L, prec) * inner / n;
}

RInterval LaurentInstance::g() const {
  const BigInt rs = BigInt(R()) * S();
  return RInterval::rational(3 * rs - N(), 12 * rs, a1.precision());
}

RInterval LaurentInstance::sigma() const {
  const RInterval one = RInterval::point(1L, mu.precision());
  return (one + RInterval::point(2L, mu.precision()) * mu - square(mu)) / RInterval::point(2L, mu.precision());
}

RInterval LaurentInstance::ln_b() const {
  const Precision prec = a1.precision();
  const BigInt num = BigInt(R() - 1) * b2 + BigInt(S() - 1) * b1;
  if (num <= 0) {
    fail(ErrorKind::Domain, "b is not positive: (R-1) b2 + (S-1) b1 = " + to_string(num));
  }
  const BigInt k = K;
  return ln(RInterval::rational(num, 2, prec)) -
         RInterval::rational(2, k * k - k, prec) * ln_superfactorial(K - 1, prec);
}

RInterval lemma_a1(Precision prec) { return rho_of(prec) * RInterval::pi(prec); }

LaurentInstance lemma_instance(const RInterval& a2, const BigInt& b1, const BigInt& b2,
                               unsigned long L, Precision prec) {
  if (L < 1) fail(ErrorKind::InvalidArgument, "L must be positive");
  LaurentInstance inst;
  inst.rho = rho_of(prec);
  inst.mu = RInterval::rational(2, 3, prec);
  inst.a1 = lemma_a1(prec);
  inst.a2 = a2.with_precision(prec);
  inst.b1 = b1;
  inst.b2 = b2;
  inst.L = L;
  const RInterval kappa = dec(kKappa, prec);
  const RInterval Lr = pt(L, prec);
  inst.K = 1 + floor_exact(kappa * Lr * inst.a1 * inst.a2, "kappa L a1 a2");
  inst.R1 = 2;
  inst.S1 = (L + 1) / 2;
  const RInterval KL = pt(inst.K - 1, prec) * Lr;
  inst.R2 = 1 + floor_exact(sqrt(KL * inst.a2 / inst.a1), "sqrt((K-1) L a2/a1)");
  inst.S2 = 1 + floor_exact(sqrt(KL * inst.a1 / inst.a2), "sqrt((K-1) L a1/a2)");
  return inst;
}

LaurentResult laurent_check(const LaurentInstance& inst) {
  const Precision prec = inst.a1.precision();
  if (inst.K < 2) fail(ErrorKind::InvalidArgument, "K must be >= 2");
  if (inst.L < 1 || inst.R1 < 1 || inst.R2 < 1 || inst.S1 < 1 || inst.S2 < 1) {
    fail(ErrorKind::InvalidArgument, "L, R1, R2, S1, S2 must be positive");
  }
  if (certainly_less(inst.mu, RInterval::rational(1, 3, prec)) ||
      certainly_less(RInterval::point(1L, prec), inst.mu)) {
    fail(ErrorKind::InvalidArgument, "mu must lie in [1/3, 1], got " + inst.mu.str());
  }
  if (!certainly_less(RInterval::point(1L, prec), inst.rho)) {
    fail(ErrorKind::InvalidArgument, "rho must exceed 1, got " + inst.rho.str());
  }

  const RInterval K = pt(inst.K, prec), L = pt(inst.L, prec), D = pt(inst.D, prec);
  const RInterval R = pt(inst.R(), prec), S = pt(inst.S(), prec);
  const RInterval one = RInterval::point(1L, prec);
  const RInterval ln_rho = ln(inst.rho);
  const RInterval ln_b = inst.ln_b();
  const RInterval gL = inst.g() * L * (R * inst.a1 + S * inst.a2);

  const RInterval lhs = K * (inst.sigma() * L - one) * ln_rho - (D + one) * ln(BigInt(inst.N()), prec) -
                        D * pt(inst.K - 1, prec) * ln_b - gL;
  LaurentResult r;
  r.epsilon = epsilon_exact(inst.N(), prec);
  r.margin = lhs - r.epsilon;
  r.ok = r.margin.certainly_positive();
  r.log_bound = -(inst.mu * K * L * ln_rho);
  r.bound = exp(r.log_bound);

  const RInterval bprime = RInterval::point(inst.b1, prec) / inst.a2 + RInterval::point(inst.b2, prec) / inst.a1;
  r.gL_shortcut_holds = certainly_less(gL, K * (RInterval::rational(31, 20, prec) * L + dec("0.0612", prec)));
  r.ln_b_shortcut_holds = certainly_less(ln_b, ln(bprime) + dec("2.3264", prec));
  r.max_factor_shortcut_holds =
      certainly_less(L * R, L * (RInterval::point(2L, prec) + sqrt(dec(kKappa, prec)) * inst.a2 * L));
  return r;
}

CorBound cor_lower_bound(const RInterval& a2_in, const RInterval& bprime_in, Precision prec) {
  const RInterval a2 = a2_in.with_precision(prec);
  const RInterval bprime = bprime_in.with_precision(prec);
  const RInterval thousand = RInterval::point(1000L, prec);
  if (certainly_less(a2, thousand + lemma_a1(prec))) {
    fail(ErrorKind::Precondition, "hypothesis a2 >= 1000 + a1 fails: a2 = " + a2.str());
  }
  if (!certainly_less(dec("0.056", prec), bprime)) {
    fail(ErrorKind::Precondition, "hypothesis b' > 0.056 fails: b' = " + bprime.str());
  }

  CorBound out;
  const RInterval ln_bp = ln(bprime);
  const RInterval raw = RInterval::rational(45, 62, prec) * (ln_bp + dec("5.49", prec));
  const auto [flo, fhi] = raw.floor_range();
  out.L_ambiguous = flo != fhi;
  // A larger L only lowers the bound, so the upper floor is the safe choice.
  out.L_formula = fhi.get_ui() + 1;
  out.L = std::max<unsigned long>(3, out.L_formula);
  out.floor_activated = out.L != out.L_formula;

  const RInterval L = pt(out.L, prec);
  out.log_lambda_lower = -(dec("3.741", prec) * square(ln_bp + dec("6.87", prec)) * a2) -
                         RInterval::rational(31, 15, prec) * L - ln(L) -
                         ln(RInterval::point(2L, prec) + dec("0.222", prec) * L * a2);
  return out;
}

LemmaConstants lemma_constants(Precision prec) {
  LemmaConstants c;
  const RInterval ratio = RInterval::rational(45, 62, prec);
  c.coefficient = RInterval::rational(2, 3, prec) * dec("3.1", prec) * dec(kKappa, prec) * lemma_a1(prec) *
                  square(ratio);
  c.sqrt_kappa = sqrt(dec(kKappa, prec));
  c.epsilon_33091 = epsilon_N(33091, prec);
  return c;
}

KNValues lemma_k_n(unsigned long L, const RInterval& a2, Precision prec) {
  KNValues v;
  v.K = 1 + floor_exact(dec(kKappa, prec) * pt(L, prec) * lemma_a1(prec) * a2.with_precision(prec),
                        "kappa L a1 a2");
  v.N = v.K * L;
  return v;
}

RInterval delta_upper(const RInterval& ln_c_in, unsigned long z, Precision prec) {
  const RInterval ln_c = ln_c_in.with_precision(prec);
  if (z < 2) fail(ErrorKind::InvalidArgument, "delta_upper needs z >= 2");
  if (mpfr_cmp_ui(ln_c.lo(), 1000) < 0) {
    fail(ErrorKind::Inapplicable,
         "two-logarithm lower bound inapplicable: needs ln c >= 1000, got " + ln_c.str(8));
  }
  const RInterval a2 = ln_c + lemma_a1(prec);
  const RInterval one = RInterval::point(1L, prec);
  const RInterval bprime = pt(z, prec) * (one / dec("69.73", prec) + one / a2);
  const CorBound cor = cor_lower_bound(a2, bprime, prec);
  return RInterval::point(2L, prec) * (-cor.log_lambda_lower + ln(RInterval::pi(prec))) / ln_c;
}

RInterval delta_upper(const PrimPair& p, unsigned long z, Precision prec) {
  return delta_upper(ln(triple_of(p).c, prec), z, prec);
}

DeltaBounds delta_bounds(const PrimPair& p, unsigned long z, Precision prec) {
  DeltaBounds d;
  d.lower = delta_lower(p, prec);
  d.upper = delta_upper(p, z, prec);
  d.consistent = certainly_less(d.lower, d.upper);
  return d;
}

}  // namespace jeskit
