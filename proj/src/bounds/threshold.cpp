#include <algorithm>
#include <vector>

#include "jeskit/bounds.hpp"
#include "jeskit/error.hpp"

namespace jeskit {

namespace {

RInterval dec(const char* text, Precision prec) { return RInterval::decimal(text, prec); }

struct Pieces {
  RInterval s, u, Lp, dLp;  // t + ln 2, ln s, L', dL'/dt
};

Pieces pieces(const RInterval& t) {
  const Precision prec = t.precision();
  Pieces p;
  p.s = t + RInterval::ln2(prec);
  p.u = ln(p.s);
  const RInterval ratio = RInterval::rational(45, 62, prec);
  p.Lp = ratio * p.u + dec("1.56", prec);
  p.dLp = ratio / p.s;
  return p;
}

RInterval lhs(ThresholdForm form, const RInterval& t) { return pow(t, exponent_of(form, t.precision())); }

RInterval gap(ThresholdForm form, const RInterval& t) { return lhs(form, t) - rhs_final(t); }

RInterval gap_derivative(ThresholdForm form, const RInterval& t) {
  const RInterval q = exponent_of(form, t.precision());
  return q * pow(t, q - RInterval::point(1L, t.precision())) - rhs_final_derivative(t);
}

// For t >= T: t * RHS'(t) <= A ln(t + ln 2) + B, so q t^q > A ln(t + ln 2) + B
// together with q^2 T^q > A (which keeps the difference increasing) gives
// f' > 0 on [T, oo).
bool tail_certified(ThresholdForm form, const RInterval& T) {
  const Precision prec = T.precision();
  const RInterval one = RInterval::point(1L, prec);
  const RInterval ratio = RInterval::rational(45, 62, prec);
  const RInterval c1 = dec("14.964", prec);  // 2 * 7.482
  const RInterval grow = one + RInterval::point(70L, prec) / T;
  const RInterval A = grow * (c1 + dec("1.4", prec) * square(ratio));
  const RInterval B = grow * (c1 * dec("2.139", prec) + dec("1.4", prec) * ratio * dec("1.56", prec)) +
                      RInterval::rational(31, 15, prec) * ratio / T + ratio / (dec("1.56", prec) * T);
  const RInterval q = exponent_of(form, prec);
  const RInterval Tq = pow(T, q);
  const bool convex = certainly_less(A, square(q) * Tq);
  const bool start = (q * Tq - A * ln(T + RInterval::ln2(prec)) - B).certainly_positive();
  return convex && start;
}

std::string describe(const RInterval& v) { return v.str(15); }

}  // namespace

std::string to_string(ThresholdForm form) {
  return form == ThresholdForm::ThreeFifths ? "3/5" : "2/3";
}

RInterval exponent_of(ThresholdForm form, Precision prec) {
  return form == ThresholdForm::ThreeFifths ? RInterval::rational(3, 5, prec)
                                            : RInterval::rational(2, 3, prec);
}

RInterval rhs_final(const RInterval& t, bool with_correction) {
  if (mpfr_cmp_ui(t.lo(), 1000) <= 0) {
    fail(ErrorKind::InvalidArgument, "rhs_final needs t = ln m > 1000, got " + t.str(8));
  }
  const Precision prec = t.precision();
  const Pieces p = pieces(t);
  const RInterval lead = with_correction ? p.u : p.s;
  const RInterval one = RInterval::point(1L, prec);
  const RInterval first =
      dec("7.482", prec) * square(lead + dec("2.139", prec)) * (one + RInterval::point(70L, prec) / p.s);
  const RInterval second = RInterval::rational(31, 15, prec) * p.Lp / t;
  const RInterval third =
      (ln(dec("6.29", prec) * p.Lp) + dec("0.7", prec) * square(p.Lp) * (t + RInterval::point(70L, prec))) / t;
  return first + second + third;
}

RInterval rhs_final_derivative(const RInterval& t) {
  if (mpfr_cmp_ui(t.lo(), 1000) <= 0) {
    fail(ErrorKind::InvalidArgument, "rhs_final_derivative needs t > 1000, got " + t.str(8));
  }
  const Precision prec = t.precision();
  const Pieces p = pieces(t);
  const RInterval one = RInterval::point(1L, prec);
  const RInterval two = RInterval::point(2L, prec);
  const RInterval seventy = RInterval::point(70L, prec);
  const RInterval w = p.u + dec("2.139", prec);
  const RInterval d1 =
      dec("7.482", prec) * (two * w / p.s * (one + seventy / p.s) - seventy * square(w) / square(p.s));
  const RInterval d2 = RInterval::rational(31, 15, prec) * (p.dLp / t - p.Lp / square(t));
  const RInterval d3 = p.dLp / p.Lp / t - ln(dec("6.29", prec) * p.Lp) / square(t);
  const RInterval d4 =
      dec("0.7", prec) * (two * p.Lp * p.dLp * (one + seventy / t) - seventy * square(p.Lp) / square(t));
  return d1 + d2 + d3 + d4;
}

ThresholdCert certify_threshold(ThresholdForm form, const RInterval& t0_in, Precision prec) {
  ThresholdCert cert;
  cert.form = form;
  cert.t0 = t0_in.with_precision(prec);
  if (mpfr_cmp_ui(cert.t0.lo(), 1000) <= 0) {
    fail(ErrorKind::InvalidArgument, "certify_threshold needs t0 > 1000");
  }
  cert.lhs_at_t0 = lhs(form, cert.t0);
  cert.rhs_at_t0 = rhs_final(cert.t0);
  cert.monotone_from = cert.t0;
  if (!certainly_less(cert.rhs_at_t0, cert.lhs_at_t0)) {
    cert.failure = "t0 = " + describe(cert.t0) + ": lhs " + cert.lhs_at_t0.str(10) +
                   " does not exceed rhs " + cert.rhs_at_t0.str(10);
    return cert;
  }

  // Geometric cover of [t0, 16 t0]; a piece that fails is halved.
  const double start = cert.t0.lo_d();
  const double end = 16.0 * cert.t0.hi_d();
  struct Piece {
    double a, b;
    int depth;
  };
  std::vector<Piece> todo;
  for (double a = start; a < end;) {
    const double b = std::min(end, a * 1.05);
    todo.push_back({a, b, 0});
    a = b;
  }
  std::reverse(todo.begin(), todo.end());
  while (!todo.empty()) {
    const Piece pc = todo.back();
    todo.pop_back();
    const RInterval J = RInterval::from_doubles(pc.a, pc.b, prec);
    if (gap_derivative(form, J).certainly_positive()) {
      cert.checked_at.push_back(J);
      continue;
    }
    if (pc.depth >= 30) {
      cert.failure = "derivative not certified positive on " + describe(J);
      return cert;
    }
    const double mid = 0.5 * (pc.a + pc.b);
    todo.push_back({mid, pc.b, pc.depth + 1});
    todo.push_back({pc.a, mid, pc.depth + 1});
  }

  cert.tail_from = RInterval::from_doubles(end, end, prec);
  if (!tail_certified(form, cert.tail_from)) {
    cert.failure = "tail estimate fails at T = " + describe(cert.tail_from);
    return cert;
  }
  cert.verdict = true;
  return cert;
}

Crossover crossover(ThresholdForm form, Precision prec) {
  double lo = 1001.0, hi = 1e7;
  auto sign_at = [&](double t) {
    const RInterval v = gap(form, RInterval::from_doubles(t, t, prec));
    return v.certainly_positive() ? 1 : v.certainly_negative() ? -1 : 0;
  };
  if (sign_at(lo) != -1 || sign_at(hi) != 1) {
    fail(ErrorKind::Domain, "no sign change of t^q - rhs on [1001, 1e7]");
  }
  while (hi - lo > 1.0) {
    const double mid = 0.5 * (lo + hi);
    const int s = sign_at(mid);
    if (s == 0) break;  // undecidable at this precision; keep the bracket
    (s > 0 ? hi : lo) = mid;
  }
  Crossover c;
  c.t = RInterval::from_doubles(lo, hi, prec);
  c.log10m = c.t / ln(BigInt(10), prec);
  return c;
}

RInterval ln_power_of_ten(const BigInt& k, Precision prec) {
  return RInterval::point(k, prec) * ln(BigInt(10), prec);
}

}  // namespace jeskit
