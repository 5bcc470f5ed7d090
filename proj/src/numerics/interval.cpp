#include "jeskit/numerics/interval.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "jeskit/error.hpp"

namespace jeskit {

namespace {

// Scratch MPFR value with automatic cleanup.
class Scratch {
 public:
  explicit Scratch(Precision prec) { mpfr_init2(v_, prec); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }

 private:
  mpfr_t v_;
};

void raise_precision(mpfr_ptr lo, mpfr_ptr hi, Precision prec) {
  if (mpfr_get_prec(lo) < prec) {
    mpfr_prec_round(lo, prec, MPFR_RNDD);
    mpfr_prec_round(hi, prec, MPFR_RNDU);
  }
}

}  // namespace

RInterval::RInterval(Precision prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RInterval::RInterval(const RInterval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

RInterval::RInterval(RInterval&& other) noexcept {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

RInterval& RInterval::operator=(const RInterval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

RInterval& RInterval::operator=(RInterval&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

RInterval::~RInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RInterval RInterval::point(long v, Precision prec) {
  RInterval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

RInterval RInterval::point(const BigInt& v, Precision prec) {
  RInterval r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

RInterval RInterval::rational(const BigInt& num, const BigInt& den, Precision prec) {
  if (den == 0) fail(ErrorKind::Domain, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  RInterval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

RInterval RInterval::decimal(std::string_view text, Precision prec) {
  RInterval r(prec);
  const std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(r.lo_, s.c_str(), &end, 10, MPFR_RNDD);
  if (end == s.c_str() || *end != '\0') {
    fail(ErrorKind::InvalidArgument, "not a decimal number: '" + s + "'");
  }
  mpfr_strtofr(r.hi_, s.c_str(), &end, 10, MPFR_RNDU);
  return r;
}

RInterval RInterval::from_doubles(double lo, double hi, Precision prec) {
  if (!(lo <= hi)) fail(ErrorKind::InvalidArgument, "interval with lo > hi");
  RInterval r(prec);
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

RInterval RInterval::hull(const RInterval& a, const RInterval& b) {
  RInterval r(std::max(a.precision(), b.precision()));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

RInterval RInterval::pi(Precision prec) {
  RInterval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

RInterval RInterval::ln2(Precision prec) {
  RInterval r(prec);
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

double RInterval::mid_d() const {
  Scratch m(precision() + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  return mpfr_get_d(m, MPFR_RNDN);
}

double RInterval::width_d() const {
  Scratch w(precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w, MPFR_RNDU);
}

RInterval RInterval::with_precision(Precision prec) const {
  RInterval r(prec);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

bool RInterval::contains(mpfr_srcptr v) const {
  return mpfr_lessequal_p(lo_, v) != 0 && mpfr_lessequal_p(v, hi_) != 0;
}

bool RInterval::contains(const RInterval& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) != 0 && mpfr_lessequal_p(inner.hi_, hi_) != 0;
}

bool RInterval::contains(long v) const {
  return mpfr_cmp_si(lo_, v) <= 0 && mpfr_cmp_si(hi_, v) >= 0;
}

std::pair<BigInt, BigInt> RInterval::floor_range() const {
  BigInt a, b;
  mpfr_get_z(a.get_mpz_t(), lo_, MPFR_RNDD);
  mpfr_get_z(b.get_mpz_t(), hi_, MPFR_RNDD);
  return {a, b};
}

std::string RInterval::str(int digits) const {
  std::array<char, 256> lo{};
  std::array<char, 256> hi{};
  mpfr_snprintf(lo.data(), lo.size(), "%.*RDg", digits, lo_);
  mpfr_snprintf(hi.data(), hi.size(), "%.*RUg", digits, hi_);
  return std::string("[") + lo.data() + ", " + hi.data() + "]";
}

RInterval& RInterval::operator+=(const RInterval& o) {
  raise_precision(lo_, hi_, o.precision());
  mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
  return *this;
}

RInterval& RInterval::operator-=(const RInterval& o) {
  raise_precision(lo_, hi_, o.precision());
  Scratch t(precision());
  mpfr_sub(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, o.lo_, MPFR_RNDU);
  mpfr_set(lo_, t.get(), MPFR_RNDD);
  return *this;
}

RInterval& RInterval::operator*=(const RInterval& o) {
  raise_precision(lo_, hi_, o.precision());
  const Precision p = precision();
  std::array<mpfr_srcptr, 2> a{lo_, hi_};
  std::array<mpfr_srcptr, 2> b{o.lo_, o.hi_};
  Scratch lo(p), hi(p), t(p);
  mpfr_set_inf(lo.get(), 1);
  mpfr_set_inf(hi.get(), -1);
  for (auto x : a) {
    for (auto y : b) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      mpfr_min(lo, lo, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      mpfr_max(hi, hi, t, MPFR_RNDU);
    }
  }
  mpfr_set(lo_, lo.get(), MPFR_RNDD);
  mpfr_set(hi_, hi.get(), MPFR_RNDU);
  return *this;
}

RInterval& RInterval::operator/=(const RInterval& o) {
  if (o.contains(0L)) fail(ErrorKind::Domain, "interval division by an interval containing 0");
  raise_precision(lo_, hi_, o.precision());
  const Precision p = precision();
  std::array<mpfr_srcptr, 2> a{lo_, hi_};
  std::array<mpfr_srcptr, 2> b{o.lo_, o.hi_};
  Scratch lo(p), hi(p), t(p);
  mpfr_set_inf(lo.get(), 1);
  mpfr_set_inf(hi.get(), -1);
  for (auto x : a) {
    for (auto y : b) {
      mpfr_div(t, x, y, MPFR_RNDD);
      mpfr_min(lo, lo, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      mpfr_max(hi, hi, t, MPFR_RNDU);
    }
  }
  mpfr_set(lo_, lo.get(), MPFR_RNDD);
  mpfr_set(hi_, hi.get(), MPFR_RNDU);
  return *this;
}

RInterval operator-(const RInterval& a) {
  RInterval r(a.precision());
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

bool certainly_less(const RInterval& a, const RInterval& b) {
  return mpfr_less_p(a.hi(), b.lo()) != 0;
}

RInterval RInterval::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Precision prec) {
  if (mpfr_nan_p(lo) || mpfr_nan_p(hi)) fail(ErrorKind::Domain, "NaN interval endpoint");
  RInterval r(prec);
  mpfr_set(r.lo_, lo, MPFR_RNDD);
  mpfr_set(r.hi_, hi, MPFR_RNDU);
  return r;
}

namespace {

using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

RInterval increasing(const RInterval& x, UnaryFn fn) {
  const Precision p = x.precision();
  Scratch lo(p), hi(p);
  fn(lo, x.lo(), MPFR_RNDD);
  fn(hi, x.hi(), MPFR_RNDU);
  return RInterval::from_endpoints(lo, hi, p);
}

}  // namespace

RInterval ln(const RInterval& x) {
  if (!x.certainly_positive()) fail(ErrorKind::Domain, "ln requires a strictly positive interval");
  return increasing(x, mpfr_log);
}

RInterval exp(const RInterval& x) { return increasing(x, mpfr_exp); }

RInterval sqrt(const RInterval& x) {
  if (mpfr_sgn(x.lo()) < 0) fail(ErrorKind::Domain, "sqrt of a negative interval");
  return increasing(x, mpfr_sqrt);
}

RInterval square(const RInterval& x) {
  const Precision p = x.precision();
  Scratch lo(p), hi(p), t(p);
  if (x.certainly_positive() || x.certainly_negative()) {
    mpfr_srcptr near = x.certainly_positive() ? x.lo() : x.hi();
    mpfr_srcptr far = x.certainly_positive() ? x.hi() : x.lo();
    mpfr_sqr(lo, near, MPFR_RNDD);
    mpfr_sqr(hi, far, MPFR_RNDU);
  } else {
    mpfr_set_zero(lo, 1);
    mpfr_sqr(hi, x.lo(), MPFR_RNDU);
    mpfr_sqr(t, x.hi(), MPFR_RNDU);
    mpfr_max(hi, hi, t, MPFR_RNDU);
  }
  return RInterval::from_endpoints(lo, hi, p);
}

RInterval pow(const RInterval& base, const RInterval& exponent) {
  if (!base.certainly_positive()) fail(ErrorKind::Domain, "pow requires a strictly positive base");
  return exp(exponent * ln(base));
}

RInterval min(const RInterval& a, const RInterval& b) {
  const Precision p = std::max(a.precision(), b.precision());
  Scratch lo(p), hi(p);
  mpfr_min(lo, a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(hi, a.hi(), b.hi(), MPFR_RNDU);
  return RInterval::from_endpoints(lo, hi, p);
}

RInterval max(const RInterval& a, const RInterval& b) {
  const Precision p = std::max(a.precision(), b.precision());
  Scratch lo(p), hi(p);
  mpfr_max(lo, a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(hi, a.hi(), b.hi(), MPFR_RNDU);
  return RInterval::from_endpoints(lo, hi, p);
}

RInterval ln(const BigInt& v, Precision prec) {
  if (v <= 0) fail(ErrorKind::Domain, "ln of a non-positive integer");
  return ln(RInterval::point(v, prec));
}

RInterval ln_factorial(unsigned long n, Precision prec) {
  Scratch x(prec), lo(prec), hi(prec);
  mpfr_set_ui(x, n + 1, MPFR_RNDN);  // exact for the sizes used here
  int sign = 0;
  mpfr_lgamma(lo, &sign, x, MPFR_RNDD);
  mpfr_lgamma(hi, &sign, x, MPFR_RNDU);
  return RInterval::from_endpoints(lo, hi, prec);
}

RInterval ln_superfactorial(unsigned long n, Precision prec) {
  // sum_{k=1}^{n} ln k! = sum_{j=2}^{n} (n + 1 - j) ln j
  Scratch lo(prec), hi(prec), t(prec);
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
  for (unsigned long j = 2; j <= n; ++j) {
    const unsigned long weight = n + 1 - j;
    mpfr_set_ui(t, j, MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDD);
    mpfr_mul_ui(t, t, weight, MPFR_RNDD);
    mpfr_add(lo, lo, t, MPFR_RNDD);
    mpfr_set_ui(t, j, MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDU);
    mpfr_mul_ui(t, t, weight, MPFR_RNDU);
    mpfr_add(hi, hi, t, MPFR_RNDU);
  }
  return RInterval::from_endpoints(lo, hi, prec);
}

}  // namespace jeskit
