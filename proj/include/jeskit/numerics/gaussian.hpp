#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>

#include "jeskit/numerics/integer.hpp"

namespace jeskit {

/// An element re + im·i of Z[i].
class GaussianInt {
 public:
  GaussianInt() = default;
  GaussianInt(BigInt re, BigInt im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianInt(long re, long im) : re_(re), im_(im) {}
  explicit GaussianInt(BigInt re) : re_(std::move(re)), im_(0) {}

  static GaussianInt i() { return {0L, 1L}; }
  static GaussianInt one() { return {1L, 0L}; }

  /// The four units in the order 1, i, -1, -i (so units()[k] == i^k).
  static const std::array<GaussianInt, 4>& units();

  const BigInt& re() const { return re_; }
  const BigInt& im() const { return im_; }

  BigInt norm() const { return re_ * re_ + im_ * im_; }
  GaussianInt conj() const { return {re_, -im_}; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_unit() const { return norm() == 1; }

  GaussianInt& operator+=(const GaussianInt& o);
  GaussianInt& operator-=(const GaussianInt& o);
  GaussianInt& operator*=(const GaussianInt& o);

  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
  friend GaussianInt operator-(const GaussianInt& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string str() const;

 private:
  BigInt re_ = 0;
  BigInt im_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GaussianInt& g);

/// Exact power in Z[i] by repeated squaring; g^0 == 1.
GaussianInt g_pow(const GaussianInt& g, unsigned long e);

/// a / b when b divides a exactly in Z[i].
std::optional<GaussianInt> exact_quotient(const GaussianInt& a, const GaussianInt& b);

inline bool divides(const GaussianInt& d, const GaussianInt& a) {
  return exact_quotient(a, d).has_value();
}

/// Remainder of a modulo b using the nearest-integer quotient; N(r) <= N(b)/2.
GaussianInt nearest_remainder(const GaussianInt& a, const GaussianInt& b);

GaussianInt ggcd(GaussianInt a, GaussianInt b);

}  // namespace jeskit
