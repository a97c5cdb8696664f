#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace mpinv {

using Rational = mpq_class;

/// Exact Gaussian rational re + im*i. Both parts are kept canonical (lowest
/// terms, positive denominator), so structural equality is value equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// Builds num/den; throws DivisionByZero for den == 0.
  static Scalar fraction(long num, long den);
  static Scalar imaginary_unit() { return {Rational(0), Rational(1)}; }

  /// Parses "a/b", "a/b+c/d*i", "c/d*i", "i", "-i" (denominators optional).
  static Scalar parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2.
  Rational abs_squared() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return {-re_, -im_}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text form, the inverse of parse().
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses a signed rational "a" or "a/b"; throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace mpinv
