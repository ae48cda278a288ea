#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hpdt/curve.hpp"
#include "hpdt/gaussian.hpp"
#include "hpdt/ratfunc.hpp"

namespace hpdt {

// ---------------------------------------------------------------------------
// Named curves. Each is generic over the coefficient field so the same
// constructor serves numeric specializations and the function-field model.
// ---------------------------------------------------------------------------

/// E_r: y^2 = (x + 2r^2)(x - 2r^2)(x - r^4 - 1).
template <ExactField F>
Curve<F> er_curve(const F& r) {
  const F r2 = r * r;
  const F r4 = r2 * r2;
  return Curve<F>::from_cubic(-(r4 + F(1)), F(-4) * r4, F(4) * r4 * (r4 + F(1)));
}

/// y^2 = x^3 + 4(u^4 - 1)^2 x  (a = s^2 - r^2 square)
template <ExactField F>
Curve<F> fam1_curve(const F& u) {
  const F u4m1 = u * u * u * u - F(1);
  return Curve<F>::from_cubic(F(0), F(4) * u4m1 * u4m1, F(0));
}

/// y^2 = x^3 + 4k^2(k^2u^4 - 1)^2 x
template <ExactField F>
Curve<F> fam2k_curve(const F& k, const F& u) {
  const F w = k * k * u * u * u * u - F(1);
  return Curve<F>::from_cubic(F(0), F(4) * k * k * w * w, F(0));
}

/// y^2 = x^3 + 4 alpha^2 (alpha^2 - 1)^2 x  (s = alpha r)
template <ExactField F>
Curve<F> fam2_curve(const F& alpha) {
  const F w = alpha * alpha - F(1);
  return Curve<F>::from_cubic(F(0), F(4) * alpha * alpha * w * w, F(0));
}

/// y^2 = x^3 - 12x (r = 2u/(3-u^2) a square)
template <ExactField F>
Curve<F> rsq_curve() {
  return Curve<F>::from_cubic(F(0), F(-12), F(0));
}

/// y^2 = x^3 - u^2(u^2-1)^2 x  (c = s^2 + t^2 square)
template <ExactField F>
Curve<F> sec7_curve(const F& u) {
  const F w = u * u - F(1);
  return Curve<F>::from_cubic(F(0), -(u * u * w * w), F(0));
}

/// Y^2 - 9(z^3+1)Y = X^3 - 27(z^3+1)^2, the section x^3 + y^3 = z^3 + 1 at fixed z.
template <ExactField F>
Curve<F> cubic_z_curve(const F& z) {
  const F c = z * z * z + F(1);
  return Curve<F>(F(0), F(0), F(-9) * c, F(0), F(-27) * c * c);
}

/// Y^2 = X^3 - 27k^3(k^3-4)/4, the section x + y = k.
template <ExactField F>
Curve<F> cubic_k_curve(const F& k) {
  const F k3 = k * k * k;
  return Curve<F>::from_cubic(F(0), F(0), F(-27) * k3 * (k3 - F(4)) / F(4));
}

/// y^2 = x^3 + 3x^2 + x - 1: the s = r + 2 specialization t^2 = (r+1)(r^2+2r-1)/4
/// scaled by y = 2t, x = r.
template <ExactField F>
Curve<F> alpha2_curve() {
  return Curve<F>::from_cubic(F(3), F(1), F(-1));
}

/// (r, t) on the s = r + 2 curve from a point of the scaled model.
template <ExactField F>
std::pair<F, F> alpha2_to_rt(const Point<F>& p) {
  return {p.x(), p.y() / F(2)};
}

/// The eight listed torsion points of E_r (O first), in the order
/// O, (-2r^2,0), (2r^2,0), (r^4+1,0), (2r^4, +-2r^2(r^4-1)), (2, +-2(r^4-1)).
template <ExactField F>
std::array<Point<F>, 8> er_torsion_points(const F& r) {
  const F r2 = r * r;
  const F r4 = r2 * r2;
  const F w = r4 - F(1);
  return {Point<F>(),
          Point<F>(-(F(2) * r2), F(0)),
          Point<F>(F(2) * r2, F(0)),
          Point<F>(r4 + F(1), F(0)),
          Point<F>(F(2) * r4, F(2) * r2 * w),
          Point<F>(F(2) * r4, -(F(2) * r2 * w)),
          Point<F>(F(2), F(2) * w),
          Point<F>(F(2), -(F(2) * w))};
}

/// Point (r^2+1, p r (1 - r^2)) on E_r, for p^2 - 3r^2 = 1.
template <ExactField F>
Point<F> pell_point(const F& r, const F& p) {
  return Point<F>(r * r + F(1), p * r * (F(1) - r * r));
}

template <ExactField F>
struct AlphaS {
  F alpha;
  F s;
};

/// alpha = 2r(r^4-1)/(x - 2r^4), s = r(x-2)/(x - 2r^4) = r + alpha.
template <ExactField F>
AlphaS<F> er_to_alpha_s(const F& r, const Point<F>& p) {
  if (p.is_infinity()) throw CurveError("er_to_alpha_s: point at infinity");
  const F r4 = r * r * r * r;
  const F den = p.x() - F(2) * r4;
  if (is_zero(den)) throw CurveError("er_to_alpha_s: pole at x = 2r^4");
  return {F(2) * r * (r4 - F(1)) / den, r * (p.x() - F(2)) / den};
}

/// Inverse direction: the E_r x-coordinate for s = r + alpha.
template <ExactField F>
F alpha_to_er_x(const F& r, const F& alpha) {
  if (is_zero(alpha)) throw CurveError("alpha_to_er_x: alpha = 0");
  const F r4 = r * r * r * r;
  return F(2) * r4 + F(2) * r * (r4 - F(1)) / alpha;
}

/// Map from y^2 = x^3 + 4(u^4-1)^2 x to (r, s).
template <ExactField F>
std::pair<F, F> fam1_point_to_rs(const F& u, const Point<F>& p) {
  const F u2 = u * u;
  const F num = -p.y();
  return {num / (F(2) * p.x() * (u2 + F(1))), num / (F(2) * p.x() * (u2 - F(1)))};
}

// ---------------------------------------------------------------------------
// Fermat cubic sections x^3 + y^3 = z^3 + 1.
// Forward maps send an affine solution to the Weierstrass model; backward
// maps invert them. Classical correspondence for x^3 + y^3 = c:
//   X' = 12c/(x+y), Y' = 36c(y-x)/(x+y) on Y'^2 = X'^3 - 432c^2,
// followed by X' = 4X, Y' = 8Y - 36c onto the long model of cubic_z_curve.
// The y - x orientation sends 2P to x = -(2z^3+1)/(z^3-1), y = z(z^3+2)/(z^3-1).
// ---------------------------------------------------------------------------

template <ExactField F>
struct CubicSolution {
  F x, y, z;
  friend bool operator==(const CubicSolution&, const CubicSolution&) = default;
};

template <ExactField F>
Point<F> cubic_z_forward(const CubicSolution<F>& s) {
  const F c = s.z * s.z * s.z + F(1);
  const F sum = s.x + s.y;
  if (is_zero(sum)) throw CurveError("cubic_z_forward: pole at x + y = 0");
  const F xp = F(12) * c / sum;
  const F yp = F(36) * c * (s.y - s.x) / sum;
  return Point<F>(xp / F(4), (yp + F(36) * c) / F(8));
}

template <ExactField F>
CubicSolution<F> cubic_z_backward(const F& z, const Point<F>& p) {
  if (p.is_infinity() || is_zero(p.x())) throw CurveError("cubic_z_backward: pole");
  const F c = z * z * z + F(1);
  const F xp = F(4) * p.x();
  const F yp = F(8) * p.y() - F(36) * c;
  return {(F(36) * c - yp) / (F(6) * xp), (F(36) * c + yp) / (F(6) * xp), z};
}

/// X = 3kz, Y = 9k^2(x - k/2) with y = k - x.
template <ExactField F>
Point<F> cubic_k_forward(const F& k, const CubicSolution<F>& s) {
  if (is_zero(k)) throw CurveError("cubic_k_forward: k = 0");
  return Point<F>(F(3) * k * s.z, F(9) * k * k * (s.x - k / F(2)));
}

template <ExactField F>
CubicSolution<F> cubic_k_backward(const F& k, const Point<F>& p) {
  if (p.is_infinity() || is_zero(k)) throw CurveError("cubic_k_backward: pole");
  const F x = p.y() / (F(9) * k * k) + k / F(2);
  return {x, k - x, p.x() / (F(3) * k)};
}

template <ExactField F>
bool on_fermat_cubic(const CubicSolution<F>& s) {
  return s.x * s.x * s.x + s.y * s.y * s.y == s.z * s.z * s.z + F(1);
}

// ---------------------------------------------------------------------------
// Function-field torsion and the CLI-facing numeric catalog.
// ---------------------------------------------------------------------------

/// torsion_order over Q(u). Non-torsion up to `bound` is certified by a good
/// specialization u -> u0 (nonsingular fibre, point defined there) whose
/// specialized point has no order <= bound; symbolic multiples are only
/// formed for the orders the specializations leave possible.
std::optional<int> function_field_torsion_order(const Curve<RatFunc>& curve,
                                                const Point<RatFunc>& p, int bound = 12);

Curve<Rational> specialize(const Curve<RatFunc>& curve, const Rational& at);
Point<Rational> specialize(const Point<RatFunc>& p, const Rational& at);

/// Stable catalog names.
inline constexpr std::array<std::string_view, 9> kCatalogIds = {
    "E_r", "fam1", "fam2k", "fam2", "rsq", "sec7", "cubicZ", "cubicK", "alpha2"};

/// Number of parameters each id takes.
int catalog_arity(std::string_view id);

/// Numeric catalog curve; throws std::invalid_argument on unknown id or
/// wrong parameter count, CurveError on degenerate parameters.
Curve<Rational> curve_catalog(std::string_view id, std::span<const Rational> params);

/// Same curve with a symbolic parameter (the last parameter becomes u;
/// fam2k takes k numeric).
Curve<RatFunc> curve_catalog_symbolic(std::string_view id, std::span<const Rational> fixed);

}  // namespace hpdt
