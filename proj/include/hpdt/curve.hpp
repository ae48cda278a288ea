#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "hpdt/field.hpp"

namespace hpdt {

class CurveError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Affine point or the point at infinity.
template <ExactField F>
class Point {
 public:
  Point() = default;  // infinity
  Point(F x, F y) : xy_(std::in_place, std::move(x), std::move(y)) {}

  bool is_infinity() const { return !xy_.has_value(); }
  const F& x() const { return xy_->first; }
  const F& y() const { return xy_->second; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::optional<std::pair<F, F>> xy_;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, nonsingular.
template <ExactField F>
class Curve {
 public:
  Curve(F a1, F a2, F a3, F a4, F a6)
      : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)),
        a6_(std::move(a6)) {
    if (is_zero(discriminant())) throw CurveError("singular Weierstrass model (zero discriminant)");
  }

  /// y^2 = x^3 + a2 x^2 + a4 x + a6
  static Curve from_cubic(F a2, F a4, F a6) {
    return Curve(F(0), std::move(a2), F(0), std::move(a4), std::move(a6));
  }

  const F& a1() const { return a1_; }
  const F& a2() const { return a2_; }
  const F& a3() const { return a3_; }
  const F& a4() const { return a4_; }
  const F& a6() const { return a6_; }

  F discriminant() const {
    const F b2 = a1_ * a1_ + F(4) * a2_;
    const F b4 = F(2) * a4_ + a1_ * a3_;
    const F b6 = a3_ * a3_ + F(4) * a6_;
    const F b8 = a1_ * a1_ * a6_ + F(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
    return -b2 * b2 * b8 - F(8) * b4 * b4 * b4 - F(27) * b6 * b6 + F(9) * b2 * b4 * b6;
  }

  bool on_curve(const Point<F>& p) const {
    if (p.is_infinity()) return true;
    const F& x = p.x();
    const F& y = p.y();
    return y * y + a1_ * x * y + a3_ * y == ((x + a2_) * x + a4_) * x + a6_;
  }

  Point<F> neg(const Point<F>& p) const {
    if (p.is_infinity()) return p;
    return Point<F>(p.x(), -p.y() - a1_ * p.x() - a3_);
  }

  Point<F> add(const Point<F>& p, const Point<F>& q) const {
    require_on_curve(p);
    require_on_curve(q);
    return add_unchecked(p, q);
  }

  Point<F> dbl(const Point<F>& p) const { return add(p, p); }

  /// n * p for any integer n.
  Point<F> mul(long n, const Point<F>& p) const {
    require_on_curve(p);
    Point<F> base = n < 0 ? neg(p) : p;
    unsigned long m = n < 0 ? 0ul - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    Point<F> acc;
    while (m) {
      if (m & 1ul) acc = add_unchecked(acc, base);
      m >>= 1;
      if (m) base = add_unchecked(base, base);
    }
    return acc;
  }

  /// Least n <= bound with n p = O. Over a function field a nullopt only
  /// means no torsion of order <= bound.
  std::optional<int> torsion_order(const Point<F>& p, int bound = 12) const {
    require_on_curve(p);
    Point<F> acc = p;
    for (int n = 1; n <= bound; ++n) {
      if (acc.is_infinity()) return n;
      acc = add_unchecked(acc, p);
    }
    return std::nullopt;
  }

  Point<F> add_unchecked(const Point<F>& p, const Point<F>& q) const {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const F& x1 = p.x();
    const F& y1 = p.y();
    const F& x2 = q.x();
    const F& y2 = q.y();
    F lambda, nu;
    if (x1 == x2) {
      if (is_zero(y1 + y2 + a1_ * x2 + a3_)) return Point<F>();
      const F den = F(2) * y1 + a1_ * x1 + a3_;
      lambda = (F(3) * x1 * x1 + F(2) * a2_ * x1 + a4_ - a1_ * y1) / den;
      nu = (-x1 * x1 * x1 + a4_ * x1 + F(2) * a6_ - a3_ * y1) / den;
    } else {
      const F dx = x2 - x1;
      lambda = (y2 - y1) / dx;
      nu = (y1 * x2 - y2 * x1) / dx;
    }
    F x3 = lambda * lambda + a1_ * lambda - a2_ - x1 - x2;
    F y3 = -(lambda + a1_) * x3 - nu - a3_;
    return Point<F>(std::move(x3), std::move(y3));
  }

 private:
  void require_on_curve(const Point<F>& p) const {
    if (!on_curve(p)) throw CurveError("point is not on the curve");
  }

  F a1_, a2_, a3_, a4_, a6_;
};

}  // namespace hpdt
