#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hpdt/roots.hpp"

using namespace hpdt;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }
GaussianRational G(long re, long im) { return GaussianRational(Rational(re), Rational(im)); }

Rational random_rational(std::mt19937_64& rng, long span = 60) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Q("6/-4").str() == "-3/2");
  CHECK(Q("0/7").str() == "0");
  CHECK(Q("0/7").denominator() == 1);
  CHECK(Q("12").str() == "12");
  CHECK(Q("-12/3") == Rational(-4));
  CHECK_THROWS_AS(Q("1/0"), ArithmeticError);
  CHECK_THROWS(Q("1.5"));
  CHECK_THROWS(Q("abc"));
  CHECK_THROWS_AS(Rational(0).inverse(), ArithmeticError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);
}

TEST_CASE("rational arithmetic") {
  CHECK(Q("1/2") + Q("1/3") == Q("5/6"));
  CHECK(Q("1/2") - Q("1/3") == Q("1/6"));
  CHECK(Q("2/3") * Q("9/4") == Q("3/2"));
  CHECK(Q("2/3") / Q("4/9") == Q("3/2"));
  CHECK(pow(Q("2/3"), -2) == Q("9/4"));
  CHECK(Q("-1/3") < Q("1/4"));
  CHECK(decimal_expansion(Q("18817/10864"), 11) == "1.73205081001");
  CHECK(decimal_expansion(Q("35113/40545"), 11) == "0.86602540387");
  CHECK(decimal_expansion(Q("-1/8"), 2) == "-0.12");
}

TEST_CASE("int_kth_root") {
  CHECK(int_kth_root(0, 4).root == 0);
  CHECK(int_kth_root(0, 4).exact);
  auto r = int_kth_root(81, 4);
  CHECK(r.root == 3);
  CHECK(r.exact);
  r = int_kth_root(Integer("12897917761"), 4);
  CHECK(r.root == 337);
  CHECK(r.exact);
  r = int_kth_root(80, 4);
  CHECK(r.root == 2);
  CHECK_FALSE(r.exact);
  CHECK(int_kth_root(Integer("93189077595601"), 4).exact);
  r = int_kth_root(Integer("93189077595602"), 4);
  CHECK(r.root == 3107);
  CHECK_FALSE(r.exact);
}

TEST_CASE("int_kth_root monotone and exact on powers") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<unsigned long> d(0, 1ul << 40);
  for (int i = 0; i < 300; ++i) {
    Integer a(d(rng)), b(d(rng));
    if (a > b) std::swap(a, b);
    for (unsigned k : {2u, 3u, 4u, 7u}) {
      CHECK(int_kth_root(a, k).root <= int_kth_root(b, k).root);
      const Integer root = int_kth_root(a, k).root;
      CHECK(ipow(root, k) <= a);
      CHECK(ipow(root + 1, k) > a);
    }
  }
}

TEST_CASE("rational_kth_root") {
  CHECK(rational_kth_root(1, 4) == Rational(1));
  CHECK(rational_kth_root(Q("1681/1600"), 2) == Q("41/40"));
  CHECK_FALSE(rational_kth_root(2, 2));
  CHECK_FALSE(rational_kth_root(-4, 2));
  CHECK(rational_kth_root(Q("-8/27"), 3) == Q("-2/3"));
  CHECK(rational_kth_root(0, 5) == Rational(0));
}

TEST_CASE("rational_kth_root on random powers and non-powers") {
  std::mt19937_64 rng(2024);
  const long primes[] = {2, 3, 5, 7, 11, 13};
  for (int i = 0; i < 400; ++i) {
    const Rational q = random_rational(rng);
    for (unsigned k : {2u, 3u, 4u, 6u, 8u}) {
      const Rational qk = pow(q, k);
      auto root = rational_kth_root(qk, k);
      REQUIRE(root);
      CHECK(pow(*root, k) == qk);
      if (k % 2 == 0) CHECK(root->sign() >= 0);
      if (q.is_zero()) continue;
      const Rational p(primes[i % 6]);
      CHECK_FALSE(rational_kth_root(p * qk, k));
    }
  }
}

TEST_CASE("gaussian arithmetic and roots") {
  const auto z = G(28, 4) * G(42, 24) + GaussianRational(1);
  CHECK(z == G(1081, 840));
  auto w = gaussian_kth_root(z, 4);
  REQUIRE(w);
  CHECK(pow(*w, 4) == z);
  CHECK(*w == G(6, 1));
  CHECK(gaussian_kth_root(GaussianRational(1), 4) == GaussianRational(1));
  CHECK(gaussian_kth_root(GaussianRational(-1), 2) == GaussianRational::i());
  CHECK_FALSE(gaussian_kth_root(G(2, 0), 2));
  CHECK_FALSE(gaussian_kth_root(G(3, 1), 4));
  CHECK(parse_gaussian("15-10i") == G(15, -10));
  CHECK(parse_gaussian("16i") == G(0, 16));
  CHECK(parse_gaussian("-i") == G(0, -1));
  CHECK(parse_gaussian("1/2+3/4i") == GaussianRational(Q("1/2"), Q("3/4")));
  CHECK(G(28, 4).str() == "28+4i");
  CHECK(G(0, -1).norm() == 1);
}

TEST_CASE("gaussian norm is multiplicative; roots of random powers") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const GaussianRational a(random_rational(rng, 20), random_rational(rng, 20));
    const GaussianRational b(random_rational(rng, 20), random_rational(rng, 20));
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK(a.norm() >= 0);
    CHECK((a.norm() == 0) == a.is_zero());
    if (i % 4 == 0 && !a.is_zero()) {
      for (unsigned k : {2u, 3u, 4u}) {
        auto w = gaussian_kth_root(pow(a, k), k);
        REQUIRE(w);
        CHECK(pow(*w, k) == pow(a, k));
      }
    }
  }
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(78) == 78);
  CHECK(squarefree_part(2808) == 78);
  CHECK(squarefree_part(243) == 3);
  CHECK(squarefree_part(1587) == 3);
  CHECK(squarefree_part(1600) == 1);
}
