#include "hpdt/catalog.hpp"

#include <numeric>
#include <stdexcept>

namespace hpdt {

Curve<Rational> specialize(const Curve<RatFunc>& c, const Rational& at) {
  return Curve<Rational>(c.a1()(at), c.a2()(at), c.a3()(at), c.a4()(at), c.a6()(at));
}

Point<Rational> specialize(const Point<RatFunc>& p, const Rational& at) {
  if (p.is_infinity()) return {};
  return Point<Rational>(p.x()(at), p.y()(at));
}

namespace {

bool defined_at(const Curve<RatFunc>& c, const Point<RatFunc>& p, const Rational& at) {
  for (const RatFunc* f : {&c.a1(), &c.a2(), &c.a3(), &c.a4(), &c.a6()}) {
    if (f->has_pole_at(at)) return false;
  }
  if (!p.is_infinity() && (p.x().has_pole_at(at) || p.y().has_pole_at(at))) return false;
  const RatFunc disc = c.discriminant();
  return !disc.has_pole_at(at) && !disc(at).is_zero();
}

}  // namespace

std::optional<int> function_field_torsion_order(const Curve<RatFunc>& curve,
                                                const Point<RatFunc>& p, int bound) {
  if (!curve.on_curve(p)) throw CurveError("point is not on the curve");
  if (p.is_infinity()) return 1;
  // the generic order, if any, is a multiple of every good specialized order
  static const long kNums[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  int required = 1;
  int good = 0;
  for (long n : kNums) {
    for (const Rational& at : {Rational(n), Rational(Integer(1), Integer(n)), Rational(-n)}) {
      if (!defined_at(curve, p, at)) continue;
      ++good;
      const auto specialized = specialize(curve, at).torsion_order(specialize(p, at), bound);
      if (!specialized) return std::nullopt;
      required = std::lcm(required, *specialized);
      if (required > bound) return std::nullopt;
      if (good >= 4) break;
    }
    if (good >= 4) break;
  }
  for (int m = required; m <= bound; m += required) {
    if (curve.mul(m, p).is_infinity()) return m;
  }
  return std::nullopt;
}

int catalog_arity(std::string_view id) {
  if (id == "rsq" || id == "alpha2") return 0;
  if (id == "fam2k") return 2;
  for (std::string_view known : kCatalogIds) {
    if (known == id) return 1;
  }
  throw std::invalid_argument("unknown curve id: " + std::string(id));
}

namespace {

template <ExactField F>
Curve<F> build(std::string_view id, std::span<const F> params) {
  if (static_cast<int>(params.size()) != catalog_arity(id)) {
    throw std::invalid_argument("curve " + std::string(id) + " takes " +
                                std::to_string(catalog_arity(id)) + " parameter(s)");
  }
  if (id == "E_r") return er_curve(params[0]);
  if (id == "fam1") return fam1_curve(params[0]);
  if (id == "fam2k") return fam2k_curve(params[0], params[1]);
  if (id == "fam2") return fam2_curve(params[0]);
  if (id == "rsq") return rsq_curve<F>();
  if (id == "sec7") return sec7_curve(params[0]);
  if (id == "cubicZ") return cubic_z_curve(params[0]);
  if (id == "cubicK") return cubic_k_curve(params[0]);
  return alpha2_curve<F>();
}

}  // namespace

Curve<Rational> curve_catalog(std::string_view id, std::span<const Rational> params) {
  return build<Rational>(id, params);
}

Curve<RatFunc> curve_catalog_symbolic(std::string_view id, std::span<const Rational> fixed) {
  std::vector<RatFunc> params(fixed.begin(), fixed.end());
  if (catalog_arity(id) > 0) params.push_back(RatFunc::variable());
  return build<RatFunc>(id, params);
}

}  // namespace hpdt
