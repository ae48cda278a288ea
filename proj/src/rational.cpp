#include "hpdt/rational.hpp"

#include <cctype>

namespace hpdt {

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw ArithmeticError("empty integer literal");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  if (i == text.size()) throw ArithmeticError("bad integer literal: " + std::string(text));
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ArithmeticError("bad integer literal: " + std::string(text));
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational pow(const Rational& q, long e) {
  if (e < 0) return pow(q.inverse(), -e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

std::string decimal_expansion(const Rational& q, int places) {
  const Integer num = q.numerator();
  const Integer den = q.denominator();
  Integer a = abs(num);
  Integer whole = a / den;
  Integer rem = a % den;
  std::string out = (num < 0 ? "-" : "") + whole.get_str();
  if (places <= 0) return out;
  out += '.';
  for (int i = 0; i < places; ++i) {
    rem *= 10;
    Integer digit = rem / den;
    rem %= den;
    out += static_cast<char>('0' + digit.get_si());
  }
  return out;
}

}  // namespace hpdt
