#include "jeskit/numerics/gaussian.hpp"

#include <sstream>

#include "jeskit/error.hpp"

namespace jeskit {

const std::array<GaussianInt, 4>& GaussianInt::units() {
  static const std::array<GaussianInt, 4> kUnits{GaussianInt{1L, 0L}, GaussianInt{0L, 1L},
                                                 GaussianInt{-1L, 0L}, GaussianInt{0L, -1L}};
  return kUnits;
}

GaussianInt& GaussianInt::operator+=(const GaussianInt& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianInt& GaussianInt::operator-=(const GaussianInt& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianInt& GaussianInt::operator*=(const GaussianInt& o) {
  BigInt re = re_ * o.re_ - im_ * o.im_;
  BigInt im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianInt::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& g) {
  os << g.re().get_str();
  if (g.im() >= 0) os << '+';
  return os << g.im().get_str() << 'i';
}

GaussianInt g_pow(const GaussianInt& g, unsigned long e) {
  GaussianInt result = GaussianInt::one();
  GaussianInt base = g;
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::optional<GaussianInt> exact_quotient(const GaussianInt& a, const GaussianInt& b) {
  if (b.is_zero()) fail(ErrorKind::Domain, "division by zero in Z[i]");
  const BigInt n = b.norm();
  const GaussianInt t = a * b.conj();
  if (mpz_divisible_p(t.re().get_mpz_t(), n.get_mpz_t()) == 0 ||
      mpz_divisible_p(t.im().get_mpz_t(), n.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  BigInt re, im;
  mpz_divexact(re.get_mpz_t(), t.re().get_mpz_t(), n.get_mpz_t());
  mpz_divexact(im.get_mpz_t(), t.im().get_mpz_t(), n.get_mpz_t());
  return GaussianInt{re, im};
}

namespace {

// round(p / q) for q > 0, ties toward +infinity.
BigInt round_div(const BigInt& p, const BigInt& q) {
  BigInt r;
  BigInt num = 2 * p + q;
  BigInt den = 2 * q;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

}  // namespace

GaussianInt nearest_remainder(const GaussianInt& a, const GaussianInt& b) {
  if (b.is_zero()) fail(ErrorKind::Domain, "division by zero in Z[i]");
  const BigInt n = b.norm();
  const GaussianInt t = a * b.conj();
  const GaussianInt q{round_div(t.re(), n), round_div(t.im(), n)};
  return a - q * b;
}

GaussianInt ggcd(GaussianInt a, GaussianInt b) {
  while (!b.is_zero()) {
    GaussianInt r = nearest_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace jeskit
