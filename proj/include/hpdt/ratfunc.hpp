#pragma once

#include <optional>
#include <string>

#include "hpdt/poly.hpp"

namespace hpdt {

/// Element of Q(u) in canonical form: gcd(num, den) = 1, den monic.
/// Equality is structural.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
  RatFunc(Poly num, Poly den);

  /// The indeterminate u.
  static RatFunc variable() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RatFunc inverse() const;
  /// Value at a rational point; throws when the denominator vanishes there.
  Rational operator()(const Rational& at) const;
  /// True if the denominator vanishes at `at`.
  bool has_pole_at(const Rational& at) const { return den_(at).is_zero(); }

  std::string str(std::string_view var = "u") const;

  RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  struct Canonical {};
  RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

RatFunc pow(const RatFunc& f, long e);

/// g(f) for a polynomial or rational function g.
RatFunc substitute(const Poly& g, const RatFunc& f);
RatFunc substitute(const RatFunc& g, const RatFunc& f);

/// h with h^k = f in Q(u), or nullopt.
std::optional<RatFunc> ratfunc_kth_root(const RatFunc& f, unsigned k);
inline std::optional<RatFunc> kth_root(const RatFunc& f, unsigned k) {
  return ratfunc_kth_root(f, k);
}

}  // namespace hpdt
