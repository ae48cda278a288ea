#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "hpdt/kernels.hpp"
#include "hpdt/search.hpp"

using namespace hpdt;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

std::filesystem::path temp_file(const char* name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("integer pair search") {
  const auto hits = search_integer_pairs(4000);
  REQUIRE(hits.size() == 3);
  CHECK(hits[0] == PairHit{337, 339, Rational(3107), true});
  CHECK(hits[1] == PairHit{337, 3107, Rational(339), true});
  CHECK(hits[2] == PairHit{507, 1242, Q("11663/21"), false});
  CHECK(search_integer_pairs(300).empty());
  CHECK_THROWS_AS(search_integer_pairs(1), InvalidInput);

  // every integral hit rebuilds through construct_regular
  for (const auto& h : hits) {
    auto t = construct_regular(Rational(static_cast<long>(h.r)), Rational(static_cast<long>(h.s)), 2);
    REQUIRE(t);
    CHECK(t->t == h.t);
  }
}

TEST_CASE("pair search: threads, kernels and checkpoint resume agree") {
  const auto base = search_integer_pairs(3200);
  SearchOptions threaded;
  threaded.threads = 4;
  CHECK(search_integer_pairs(3200, threaded) == base);

  kernels::force_isa(kernels::Isa::scalar);
  CHECK(search_integer_pairs(3200) == base);
  kernels::force_isa(std::nullopt);

  SearchOptions cp;
  cp.checkpoint = temp_file("hpdt_rs_checkpoint.json");
  cp.checkpoint_every = 100;
  CHECK(search_integer_pairs(3200, cp) == base);
  CHECK(std::filesystem::exists(*cp.checkpoint));
  // a finished checkpoint resumes straight to the answer
  CHECK(search_integer_pairs(3200, cp) == base);
  // wrong bound is rejected
  CHECK_THROWS_AS(search_integer_pairs(3300, cp), InvalidInput);

  // a partial checkpoint (hand-written at r = 400) resumes correctly
  {
    std::ofstream out(*cp.checkpoint);
    out << R"({"schema":"hpdt.checkpoint/1","kind":"search-rs","bound":3200,"next":400,"hits":[)"
        << R"({"r":337,"s":339,"t":"3107","integral":true},{"r":337,"s":3107,"t":"339","integral":true}]})";
  }
  CHECK(search_integer_pairs(3200, cp) == base);
  std::filesystem::remove(*cp.checkpoint);
}

TEST_CASE("pell sequence") {
  const auto seq = pell_sequence(9);
  REQUIRE(seq.size() == 9);
  CHECK(seq[0].p == 2);
  CHECK(seq[0].r == 1);
  CHECK(seq[6].p == 5042);
  CHECK(seq[6].r == 2911);
  CHECK(seq[7].p == 18817);
  CHECK(seq[7].r == 10864);
  CHECK(seq[8].p == 70226);
  CHECK(seq[8].r == 40545);
  Rational prev_err = 10;
  for (const auto& s : seq) {
    CHECK(s.p * s.p - 3 * s.r * s.r == 1);
    // error of p/r against sqrt(3): p^2/r^2 - 3 = 1/r^2 decreases
    const Rational err = Rational(s.p * s.p, s.r * s.r) - 3;
    CHECK(err > 0);
    CHECK(err < prev_err);
    prev_err = err;
    // Pell r gives a point on E_r
    const Rational r(s.r), p(s.p);
    if (r != 1) CHECK(er_curve(r).on_curve(pell_point(r, p)));
  }
  CHECK(decimal_expansion(Rational(seq[7].p, seq[7].r), 11) == "1.73205081001");
  CHECK(decimal_expansion(Rational(seq[8].p, 2 * seq[8].r), 11) == "0.86602540387");
  CHECK_THROWS(pell_sequence(0));

  auto [r, p] = pell_parametrize(Rational(1));
  CHECK(p * p - 3 * r * r == 1);
}

TEST_CASE("taxicab search k = 3") {
  const auto hits = taxicab_search(1000, 3);
  CHECK(hits.front() == TaxicabHit{1, 12, 9, 10, 3, false, std::nullopt});
  for (const auto& h : hits) {
    const Integer lhs = ipow(Integer(static_cast<unsigned long>(h.X)), 3) + ipow(Integer(static_cast<unsigned long>(h.Y)), 3);
    const Integer rhs = ipow(Integer(static_cast<unsigned long>(h.Z)), 3) + ipow(Integer(static_cast<unsigned long>(h.W)), 3);
    CHECK(lhs == rhs);
    CHECK(h.X < h.Y);
    CHECK(h.Z < h.W);
    CHECK(h.X < h.Z);
  }
  // monotone in the bound
  const auto small = taxicab_search(400, 3);
  for (const auto& h : small) CHECK(std::find(hits.begin(), hits.end(), h) != hits.end());
  for (const auto& h : hits) {
    if (h.W <= 400 && h.Y <= 400) CHECK(std::find(small.begin(), small.end(), h) != small.end());
  }

  SearchOptions t4;
  t4.threads = 4;
  CHECK(taxicab_search(1000, 3, t4) == hits);
  kernels::force_isa(kernels::Isa::scalar);
  CHECK(taxicab_search(1000, 3) == hits);
  kernels::force_isa(std::nullopt);

  SearchOptions cp;
  cp.checkpoint = temp_file("hpdt_tx_checkpoint.json");
  CHECK(taxicab_search(1000, 3, cp) == hits);
  CHECK(taxicab_search(1000, 3, cp) == hits);
  std::filesystem::remove(*cp.checkpoint);

  CHECK_THROWS_AS(taxicab_search(100, 5), InvalidInput);
  CHECK_THROWS_AS(taxicab_search(3000000, 4), InvalidInput);
}

TEST_CASE("sextic form check") {
  TaxicabHit a{243, 1600, 484, 1587, 3, true, std::nullopt};
  auto f = sextic_form_check(a);
  REQUIRE(f);
  CHECK(f->x1 == 40);
  CHECK(f->y1 == 9);
  CHECK(f->x2 == 22);
  CHECK(f->y2 == 23);
  CHECK(f->h == 3);
  TaxicabHit b{78, 2809, 289, 2808, 3, true, std::nullopt};
  f = sextic_form_check(b);
  REQUIRE(f);
  CHECK(f->x1 == 53);
  CHECK(f->y1 == 1);
  CHECK(f->x2 == 17);
  CHECK(f->y2 == 6);
  CHECK(f->h == 78);
  TaxicabHit none{1, 12, 9, 10, 3, false, std::nullopt};
  CHECK_FALSE(sextic_form_check(TaxicabHit{2, 3, 5, 7, 3, false, std::nullopt}));
  (void)none;
}

TEST_CASE("euler octic") {
  const auto rep = euler_reduction_check();
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
  const auto v = euler_quartic_parametrization(Rational(2));
  CHECK(pow(v.xyzw[0], 4) + pow(v.xyzw[1], 4) == pow(v.xyzw[2], 4) + pow(v.xyzw[3], 4));
  CHECK_FALSE(v.degenerate);
  CHECK(v.xyzw[0] == 128 + 32 - 16 + 12 + 2);
  CHECK(euler_quartic_parametrization(Rational(1)).degenerate);
}

TEST_CASE("gaussian triples") {
  const auto scan = gaussian_verify_and_scan(0);
  CHECK(scan.known.size() == 8);
  CHECK(scan.found.empty());
  const auto& first = scan.known[0];
  CHECK(first.witnesses[0] == GaussianRational(Rational(6), Rational(1)));
  const auto wide = gaussian_verify_and_scan(6);
  for (const auto& g : wide.found) {
    CHECK(verify_tuple(std::vector<GaussianRational>(g.elements.begin(), g.elements.end()), 4).ok());
    CHECK(g.seed_r.has_value());
  }
  CHECK_THROWS(gaussian_verify_and_scan(-1));
}
