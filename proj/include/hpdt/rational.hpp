#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hpdt {

using Integer = mpz_class;

/// Raised for arithmetic that has no exact answer (division by zero,
/// unparsable literals).
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Reduced fraction num/den with den > 0. Zero is 0/1.
///
/// Thin value wrapper over mpq_class so that every operator returns a
/// concrete Rational (gmpxx expression templates do not play well with
/// generic field code).
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(Integer(std::to_string(v))) {}
  Rational(unsigned long v) : q_(v) {}
  Rational(const Integer& v) : q_(v) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "p", "-p", "p/q" with decimal integers. Never goes through
  /// floating point.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational inverse() const;
  double to_double() const { return q_.get_d(); }

  /// "num/den", den omitted when 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

inline bool is_zero(const Rational& q) { return q.is_zero(); }

/// q^e for any integer e; negative e requires q != 0.
Rational pow(const Rational& q, long e);
Rational abs(const Rational& q);

/// First `places` decimals after the point, truncated toward zero.
std::string decimal_expansion(const Rational& q, int places);

Integer ipow(const Integer& base, unsigned long e);

}  // namespace hpdt
