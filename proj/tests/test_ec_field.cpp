#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hpdt/catalog.hpp"
#include "hpdt/families.hpp"

using namespace hpdt;

namespace {

const RatFunc u = RatFunc::variable();
Rational Q(const char* s) { return Rational::parse(s); }

}  // namespace

TEST_CASE("E_r coefficients at r = 11") {
  const auto E = er_curve(Rational(11));
  CHECK(E.a1() == 0);
  CHECK(E.a3() == 0);
  CHECK(E.a2() == -14642);
  CHECK(E.a4() == -58564);
  // (x + 242)(x - 242)(x - 14642) has constant term 242^2 * 14642
  CHECK(E.a6() == 857494088);
  CHECK(curve_catalog("E_r", std::vector<Rational>{11}).a6() == 857494088);
  CHECK_THROWS_AS(er_curve(Rational(1)), CurveError);
  CHECK_THROWS_AS(er_curve(Rational(0)), CurveError);
  CHECK_THROWS(curve_catalog("E_r", std::vector<Rational>{}));
  CHECK_THROWS(curve_catalog("nope", std::vector<Rational>{1}));
}

TEST_CASE("group law golden values") {
  const auto E = alpha2_curve<Rational>();
  const Point<Rational> P(1, 2);
  REQUIRE(E.on_curve(P));
  const auto P3 = E.mul(3, P);
  CHECK(P3.x() == 337);
  CHECK(P3.y() == 6214);
  auto [r, t] = alpha2_to_rt(P3);
  CHECK(r == 337);
  CHECK(t == 3107);
  CHECK(E.add(P, E.neg(P)).is_infinity());
  CHECK(E.mul(0, P).is_infinity());
  CHECK_THROWS_AS(E.add(P, Point<Rational>(1, 3)), CurveError);

  const auto F = fam1_curve(u);
  const Point<RatFunc> G(2 * (u * u + 1) * (u - 1) * (u - 1), 4 * pow(u * u + 1, 2) * (u - 1) * (u - 1));
  REQUIRE(F.on_curve(G));
  const auto G2 = F.dbl(G);
  CHECK(G2.x() == 4 * u * u);
  CHECK(G2.y() == -4 * u * (pow(u, 4) + 1));
}

TEST_CASE("group axioms on multiples of a known point") {
  const auto E = alpha2_curve<Rational>();
  const Point<Rational> P(1, 2);
  std::vector<Point<Rational>> pts;
  for (long n = -4; n <= 4; ++n) pts.push_back(E.mul(n, P));
  for (const auto& a : pts) {
    CHECK(E.on_curve(a));
    CHECK(E.add(a, Point<Rational>()) == a);
    CHECK(E.add(a, E.neg(a)).is_infinity());
    for (const auto& b : pts) {
      CHECK(E.add(a, b) == E.add(b, a));
      for (const auto& c : {pts[1], pts[6]}) CHECK(E.add(E.add(a, b), c) == E.add(a, E.add(b, c)));
    }
  }
  CHECK(E.add(E.mul(2, P), E.mul(3, P)) == E.mul(5, P));
}

TEST_CASE("E_r torsion over Q(r)") {
  const RatFunc r = u;
  const auto E = er_curve(r);
  const auto T = er_torsion_points(r);
  const int expected[] = {1, 2, 2, 2, 4, 4, 4, 4};
  for (std::size_t i = 0; i < T.size(); ++i) {
    CHECK(E.on_curve(T[i]));
    CHECK(E.torsion_order(T[i]) == expected[i]);
    if (expected[i] == 4) CHECK(E.torsion_order(E.dbl(T[i])) == 2);
  }
  CHECK(function_field_torsion_order(E, T[4]) == 4);
  CHECK(function_field_torsion_order(E, T[1]) == 2);
}

TEST_CASE("Pell point on E_r over Q(u)") {
  const RatFunc r = 2 * u / (3 - u * u);
  const RatFunc p = (3 + u * u) / (3 - u * u);
  const auto E = er_curve(r);
  const auto P = pell_point(r, p);
  CHECK(E.on_curve(P));
  CHECK_FALSE(function_field_torsion_order(E, P).has_value());
}

TEST_CASE("er_to_alpha_s") {
  const Rational r = 337;
  const auto E = er_curve(r);
  const Rational x = Q("4372394120642");
  const Rational x2r4 = x - 2 * pow(r, 4);
  auto as = er_to_alpha_s(r, Point<Rational>(x, 0));  // y is not used by the map
  CHECK(as.alpha == 2);
  CHECK(as.s == 339);
  CHECK(x2r4 == Rational(Integer("4346598285120")));
  CHECK(alpha_to_er_x(r, Rational(2)) == x);
  CHECK_THROWS(er_to_alpha_s(r, Point<Rational>(2 * pow(r, 4), 0)));
  (void)E;

  // (2, 2(r^4 - 1)) gives a trivial s over Q(r)
  const RatFunc rr = u;
  const auto T = er_torsion_points(rr);
  const auto s = er_to_alpha_s(rr, T[6]).s;
  CHECK(s.is_zero());  // x = 2 kills the numerator r(x - 2)
}

TEST_CASE("torsion translates of the Pell point give the eight s values") {
  const auto svals = pell_torsion_svalues(u);
  const auto listed = fam3_svalues(u);
  for (const auto& s : svals) {
    CHECK(std::find(listed.begin(), listed.end(), s) != listed.end());
  }
  // order-2 translates: +-s, +-1/s of the translate by O
  const RatFunc s0 = svals[0];
  for (int i = 1; i <= 3; ++i) {
    const RatFunc s = svals[i];
    CHECK((s == -s0 || s == s0.inverse() || s == -s0.inverse()));
  }
  // the two halves are distinct sets
  for (int i = 0; i < 4; ++i) {
    for (int j = 4; j < 8; ++j) CHECK(svals[i] != svals[j]);
  }
  const auto at2 = fam3_svalues(Rational(2));
  CHECK(std::find(at2.begin(), at2.end(), Q("32/7")) != at2.end());
  CHECK(std::find(at2.begin(), at2.end(), Q("7/32")) != at2.end());
  CHECK_THROWS(fam3_svalues(Rational(0)));
}

TEST_CASE("Fermat cubic: z-section 2P pullback") {
  const RatFunc z = u;
  const RatFunc w = z * z - z + 1;
  const auto E = cubic_z_curve(z);
  const Point<RatFunc> P(3 * w, 9 * w);
  REQUIRE(E.on_curve(P));
  const auto sol = cubic_z_backward(z, E.dbl(P));
  const RatFunc z3 = pow(z, 3);
  CHECK(sol.x == -(2 * z3 + 1) / (z3 - 1));
  // with 2z^3 - 1 instead the pair is not on the cubic
  CHECK_FALSE(on_fermat_cubic(CubicSolution<RatFunc>{-(2 * z3 - 1) / (z3 - 1), sol.y, z}));
  CHECK(sol.y == z * (z3 + 2) / (z3 - 1));
  CHECK(sol.z == z);
  CHECK(on_fermat_cubic(sol));
  CHECK(cubic_z_forward(sol) == E.dbl(P));
}

TEST_CASE("Fermat cubic: k-section points") {
  const RatFunc k = u;
  const auto E = cubic_k_curve(k);
  const Point<RatFunc> P(3 * k * k - 3 * k, Rational(9, 2) * k * k * (k - 2));
  const Point<RatFunc> Qp(3 * k * k + 6 * k + 9, Rational(9, 2) * (pow(k, 3) + 4 * k * k + 6 * k + 6));
  CHECK(E.on_curve(P));
  CHECK(E.on_curve(Qp));
  CHECK(on_fermat_cubic(cubic_k_backward(k, P)));
  CHECK(on_fermat_cubic(cubic_k_backward(k, E.add(P, Qp))));
}

TEST_CASE("cubic maps round-trip on random points") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-7, 7);
  int tested = 0;
  for (int i = 0; i < 200 && tested < 60; ++i) {
    const Rational z(d(rng), 3);
    if (z == -1 || z == 1 || z.is_zero()) continue;
    const auto E = cubic_z_curve(z);
    const Rational w = z * z - z + 1;
    const Point<Rational> base(3 * w, 9 * w);
    if (!E.on_curve(base)) continue;
    const auto pt = E.mul(1 + i % 3, base);
    if (pt.is_infinity() || pt.x().is_zero()) continue;
    CubicSolution<Rational> sol;
    try {
      sol = cubic_z_backward(z, pt);
    } catch (const CurveError&) {
      continue;
    }
    CHECK(on_fermat_cubic(sol));
    CHECK(cubic_z_forward(sol) == pt);
    ++tested;

    const Rational k = sol.x + sol.y;
    if (k.is_zero() || pow(k, 3) == 4) continue;
    const auto Pk = cubic_k_forward(k, sol);
    CHECK(cubic_k_curve(k).on_curve(Pk));
    const auto back = cubic_k_backward(k, Pk);
    CHECK(back.x == sol.x);
    CHECK(back.y == sol.y);
    CHECK(back.z == sol.z);
  }
  CHECK(tested > 20);
}

TEST_CASE("catalog ids") {
  for (auto id : kCatalogIds) {
    std::vector<Rational> params(static_cast<std::size_t>(catalog_arity(id)), Q("5/3"));
    CHECK_NOTHROW(curve_catalog(id, params));
  }
  const auto rsq = curve_catalog("rsq", std::vector<Rational>{});
  CHECK(rsq.a4() == -12);
}
