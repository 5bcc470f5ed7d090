#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

#include "jeskit/numerics/integer.hpp"

namespace jeskit {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kCertificationPrecision = 256;

// Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds
// the lower endpoint down and the upper endpoint up, so the result always
// encloses the exact image of the operands. Results carry the larger of the
// operand precisions.
class RInterval {
 public:
  explicit RInterval(Precision prec = kDefaultPrecision);
  RInterval(const RInterval& other);
  RInterval(RInterval&& other) noexcept;
  RInterval& operator=(const RInterval& other);
  RInterval& operator=(RInterval&& other) noexcept;
  ~RInterval();

  static RInterval point(long v, Precision prec = kDefaultPrecision);
  static RInterval point(const BigInt& v, Precision prec = kDefaultPrecision);
  /// num / den, rounded outward.
  static RInterval rational(const BigInt& num, const BigInt& den,
                            Precision prec = kDefaultPrecision);
  /// A decimal literal such as "3.741" or "1e-3", rounded outward.
  static RInterval decimal(std::string_view text, Precision prec = kDefaultPrecision);
  static RInterval from_doubles(double lo, double hi, Precision prec = kDefaultPrecision);
  /// Smallest interval containing both arguments.
  static RInterval hull(const RInterval& a, const RInterval& b);
  static RInterval pi(Precision prec = kDefaultPrecision);
  /// [lo, hi] from raw MPFR values, rounded outward to `prec`.
  static RInterval from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Precision prec);
  /// ln 2, used often enough to warrant a shortcut.
  static RInterval ln2(Precision prec = kDefaultPrecision);

  Precision precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_d() const;
  double width_d() const;

  /// Same interval re-rounded outward to another precision.
  RInterval with_precision(Precision prec) const;

  bool contains(mpfr_srcptr v) const;
  bool contains(const RInterval& inner) const;
  bool contains(long v) const;
  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }

  /// floor(lo) and floor(hi); equal when the floor is determined.
  std::pair<BigInt, BigInt> floor_range() const;

  std::string str(int digits = 12) const;

  RInterval& operator+=(const RInterval& o);
  RInterval& operator-=(const RInterval& o);
  RInterval& operator*=(const RInterval& o);
  RInterval& operator/=(const RInterval& o);

  friend RInterval operator+(RInterval a, const RInterval& b) { return a += b; }
  friend RInterval operator-(RInterval a, const RInterval& b) { return a -= b; }
  friend RInterval operator*(RInterval a, const RInterval& b) { return a *= b; }
  friend RInterval operator/(RInterval a, const RInterval& b) { return a /= b; }
  friend RInterval operator-(const RInterval& a);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

/// a.hi < b.lo: the strict inequality a < b holds for every point pair.
bool certainly_less(const RInterval& a, const RInterval& b);

RInterval ln(const RInterval& x);
RInterval exp(const RInterval& x);
RInterval sqrt(const RInterval& x);
RInterval square(const RInterval& x);
/// base^exponent for a strictly positive base.
RInterval pow(const RInterval& base, const RInterval& exponent);
RInterval min(const RInterval& a, const RInterval& b);
RInterval max(const RInterval& a, const RInterval& b);

/// ln of a positive integer.
RInterval ln(const BigInt& v, Precision prec = kDefaultPrecision);
/// ln(n!) for n >= 0.
RInterval ln_factorial(unsigned long n, Precision prec = kDefaultPrecision);
/// sum_{k=1}^{n} ln(k!), the log of the superfactorial.
RInterval ln_superfactorial(unsigned long n, Precision prec = kDefaultPrecision);

}  // namespace jeskit
