#include "mpinv/scalar.hpp"

#include <cctype>
#include <ostream>

#include "mpinv/error.hpp"

namespace mpinv {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string trimmed(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, 1);
  q /= den;
  return Scalar(q);
}

Scalar Scalar::parse(std::string_view raw) {
  const std::string text = trimmed(raw);
  if (text.empty()) throw ParseError("empty scalar");
  if (text.back() != 'i') return Scalar(parse_rational(text));

  std::string_view body(text);
  body.remove_suffix(1);
  if (!body.empty() && body.back() == '*') body.remove_suffix(1);

  // The imaginary part starts at the last sign that is not the leading one.
  std::size_t split = 0;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  const std::string_view re_text = body.substr(0, split);
  std::string_view im_text = body.substr(split);
  Rational re = re_text.empty() ? Rational(0) : parse_rational(re_text);
  Rational im;
  if (im_text.empty() || im_text == "+") {
    im = 1;
  } else if (im_text == "-") {
    im = -1;
  } else {
    im = parse_rational(im_text);
  }
  return {re, im};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational denom = o.abs_squared();
  *this *= o.conj();
  re_ /= denom;
  im_ /= denom;
  return *this;
}

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  std::string im_text;
  if (im_ == 1) {
    im_text = "i";
  } else if (im_ == -1) {
    im_text = "-i";
  } else {
    im_text = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return im_text;
  if (sgn(im_) > 0) im_text.insert(im_text.begin(), '+');
  return re_.get_str() + im_text;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace mpinv
