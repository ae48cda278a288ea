#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpdt/rational.hpp"

namespace hpdt {

/// Dense univariate polynomial over Q, ascending coefficients. The zero
/// polynomial has no coefficients; otherwise the last one is nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}
  Poly(const Rational& c);
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  /// The indeterminate.
  static Poly x();
  /// c * x^n
  static Poly monomial(const Rational& c, std::size_t n);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const;
  /// Lowest power with nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const;

  Poly monic() const;
  Poly derivative() const;
  Rational operator()(const Rational& at) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Human-readable, descending powers: "u^2 + 2*u - 1/3".
  std::string str(std::string_view var = "u") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

Poly pow(const Poly& p, unsigned e);

/// Quotient and remainder; throws on division by the zero polynomial.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd (zero if both are zero). Primitive remainder sequence over Z.
Poly gcd(const Poly& a, const Poly& b);

/// Exact k-th root q with q^k = p, leading coefficient positive for even
/// k; nullopt when p is not a k-th power in Q[x].
std::optional<Poly> poly_kth_root(const Poly& p, unsigned k);
inline std::optional<Poly> poly_square_root(const Poly& p) { return poly_kth_root(p, 2); }

/// x^degree_hint * p(1/x); requires degree_hint >= deg p.
Poly reversal(const Poly& p, unsigned degree_hint);

/// If g(a) / a^half_span is a symmetric Laurent polynomial, the h with
/// g(a) = a^half_span * h(a + 1/a).
std::optional<Poly> symmetric_in_u(const Poly& g, unsigned half_span);

/// Composition p(q).
Poly compose(const Poly& p, const Poly& q);

}  // namespace hpdt
