#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hpdt/families.hpp"
#include "hpdt/search.hpp"

using namespace hpdt;

namespace {

const RatFunc u = RatFunc::variable();
Rational Q(const char* s) { return Rational::parse(s); }

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

Poly random_poly(std::mt19937_64& rng, int max_deg = 4) {
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = Rational(coef(rng));
  return Poly(std::move(c));
}

RatFunc random_ratfunc(std::mt19937_64& rng) {
  Poly den;
  while (den.is_zero()) den = random_poly(rng, 3);
  return RatFunc(random_poly(rng), den);
}

}  // namespace

TEST_CASE("poly basics") {
  CHECK(P({1, 2}).str("a") == "2*a + 1");
  CHECK(P({}).degree() == -1);
  CHECK(P({0, 0}).is_zero());
  CHECK(P({1, 1}) * P({-1, 1}) == P({-1, 0, 1}));
  auto [q, r] = divmod(P({-1, 0, 1}), P({1, 1}));
  CHECK(q == P({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
  CHECK(P({1, 2, 3})(Rational(2)) == 17);
  CHECK(P({1, 2, 3}).derivative() == P({2, 6}));
}

TEST_CASE("ratfunc field ops") {
  CHECK((u / (u - 1)) - (u / (u - 1)) == RatFunc(0));
  CHECK((RatFunc(1) / (u * u - 1)) * (u * u - 1) == RatFunc(1));
  const RatFunc r = (pow(u, 4) + 1) / (2 * u * (u * u + 1));
  CHECK(pow(r, 4)(Rational(3)) == pow(Q("41/30"), 4));
  CHECK_THROWS(u / RatFunc(0));
  CHECK_THROWS((RatFunc(1) / (u - 2))(Rational(2)));
  // canonical form: monic denominator, no common factor
  const RatFunc f(P({2, 2}), P({2, 0, 2}) * P({1, 1}));
  CHECK(f.den() == P({1, 0, 1}));
  CHECK(f.num() == P({1}));
}

TEST_CASE("ratfunc field axioms on random samples") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 120; ++i) {
    const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
    // evaluation agrees with the symbolic result away from poles
    for (long n = -3; n <= 3; ++n) {
      const Rational at(n, 2);
      if (a.has_pole_at(at) || b.has_pole_at(at)) continue;
      CHECK((a * b + a)(at) == a(at) * b(at) + a(at));
    }
  }
}

TEST_CASE("poly_square_root") {
  CHECK(poly_square_root(P({1, 2, 1})) == P({1, 1}));
  CHECK_FALSE(poly_square_root(P({1, 0, 1})));
  CHECK(poly_square_root(P({})) == P({}));
  CHECK(poly_kth_root(pow(P({3, -1, 2}), 4), 4) == P({3, -1, 2}));
  CHECK_FALSE(poly_kth_root(pow(P({3, -1, 2}), 4) + P({1}), 4));

  // the fourth family's c has square numerator and denominator
  const auto tri = family_triple_symbolic(FamilyId::fam4);
  CHECK(poly_square_root(tri.c.num()));
  CHECK(poly_square_root(tri.c.den()));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Poly q = random_poly(rng, 6);
    auto root = poly_square_root(q * q);
    REQUIRE(root);
    CHECK((*root == q || *root == -q));
    if (!root->is_zero()) CHECK(root->leading() > 0);
  }
}

TEST_CASE("reversal") {
  CHECK(reversal(P({1, 2}), 1) == P({2, 1}));
  CHECK(reversal(P({1, 3, 1}), 2) == P({1, 3, 1}));
  const auto forms = euler_octic_forms();
  const Poly yw = forms[1] * forms[3];
  const auto [xz, rem] = divmod(forms[0] * forms[2], P({0, 0, 1}));
  CHECK(rem.is_zero());
  CHECK(reversal(yw, 12) == xz);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    Poly p = random_poly(rng, 6);
    if (p.coeff(0).is_zero()) p = p + P({1});
    const unsigned d = static_cast<unsigned>(std::max(p.degree(), 0)) + (i % 3);
    CHECK(reversal(reversal(p, d), d) == p);
  }
}

TEST_CASE("symmetric_in_u") {
  CHECK(symmetric_in_u(P({1, 0, 1}), 1) == P({0, 1}));
  CHECK_FALSE(symmetric_in_u(P({0, 0, 0, 1}), 1));
  const auto f = euler_octic_forms();
  CHECK(symmetric_in_u(f[0] * f[1] * f[2] * f[3], 14) ==
        P({324, 0, 351, 0, -80, 0, -266, 0, 141, 0, -23, 0, 1}));
}

TEST_CASE("substitute") {
  const Poly x2 = P({0, 0, 1});
  CHECK(substitute(x2, u / (u + 1)) == (u * u) / ((u + 1) * (u + 1)));
  CHECK(substitute(P({7, 3, 1}), RatFunc(0)) == RatFunc(7));
  const RatFunc r = 2 * u / (3 - u * u);
  const RatFunc p = (3 + u * u) / (3 - u * u);
  CHECK(p * p - 3 * r * r == RatFunc(1));
  CHECK(substitute(RatFunc(P({-1, 0, 1})) / RatFunc(P({0, 1})), r) == r - r.inverse());

  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    const Poly a = random_poly(rng), b = random_poly(rng);
    const RatFunc g = random_ratfunc(rng);
    CHECK(substitute(a * b, g) == substitute(a, g) * substitute(b, g));
    CHECK(substitute(a + b, g) == substitute(a, g) + substitute(b, g));
  }
}

TEST_CASE("ratfunc kth root") {
  const RatFunc f = (u * u + 1) / (u - 3);
  CHECK(kth_root(pow(f, 4), 4) == f * (f.num().leading() > 0 ? 1 : -1));
  CHECK_FALSE(kth_root(f, 2));
}
