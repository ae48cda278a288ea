#include "hpdt/gaussian.hpp"

namespace hpdt {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero Gaussian rational");
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == Rational(1)) imag = "i";
  else if (im_ == Rational(-1)) imag = "-i";
  else imag = im_.str() + "i";
  if (re_.is_zero()) return imag;
  return re_.str() + (im_.sign() > 0 ? "+" : "") + imag;
}

GaussianRational pow(const GaussianRational& z, long e) {
  if (e < 0) return pow(z.inverse(), -e);
  GaussianRational result(1);
  GaussianRational base = z;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

GaussianRational parse_gaussian(std::string_view text) {
  if (text.empty()) throw ArithmeticError("empty Gaussian literal");
  if (text.back() != 'i') return GaussianRational(Rational::parse(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // split at the last sign that is not leading and not part of "/"
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto coefficient = [](std::string_view s) {
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return Rational::parse(s);
  };
  if (split == std::string_view::npos) return {Rational(0), coefficient(body)};
  return {Rational::parse(body.substr(0, split)), coefficient(body.substr(split))};
}

}  // namespace hpdt
