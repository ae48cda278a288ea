#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "hpdt/kernels.hpp"
#include "hpdt/roots.hpp"

using namespace hpdt;
using namespace hpdt::kernels;

TEST_CASE("filter never rejects a true square") {
  // s with (s^2 r^2 - 1)(s^2 - r^2) a square: the known hits must survive
  for (auto [r, s] : {std::pair<std::uint32_t, std::uint32_t>{337, 339}, {337, 3107}, {507, 1242}}) {
    const auto t = make_pair_filter_tables(r);
    std::vector<std::uint8_t> mask(1);
    scalar::pair_square_filter(t, s, mask);
    CHECK(mask[0] == 1);
  }
}

TEST_CASE("scalar filter agrees with direct residue test") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> d(2, 50000);
  for (int i = 0; i < 50; ++i) {
    const std::uint32_t r = d(rng), s0 = d(rng);
    const auto t = make_pair_filter_tables(r);
    std::vector<std::uint8_t> mask(300);
    scalar::pair_square_filter(t, s0, mask);
    for (std::size_t j = 0; j < mask.size(); ++j) {
      const Integer R(r), S(s0 + static_cast<std::uint32_t>(j));
      const Integer v = (S * S * R * R - 1) * (S * S - R * R);
      bool ok = true;
      for (std::uint32_t m : kFilterModuli) {
        Integer res = v % m;
        if (res < 0) res += m;
        bool square = false;
        for (std::uint32_t x = 0; x < m && !square; ++x) square = (x * x) % m == res;
        ok = ok && square;
      }
      CHECK(mask[j] == (ok ? 1 : 0));
      if (int_kth_root(abs(v), 2).exact && v >= 0) CHECK(mask[j] == 1);
    }
  }
}

TEST_CASE("power_sum_row scalar values") {
  std::vector<std::uint64_t> out(4);
  scalar::power_sum_row(3, 2, 5, out);
  CHECK(out == std::vector<std::uint64_t>{133, 224, 351, 520});
}

#ifdef HPDT_HAVE_AVX2
TEST_CASE("AVX2 kernels match scalar") {
  if (!avx2_available()) {
    MESSAGE("AVX2 not available on this CPU; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint32_t> d(2, 1u << 30);
  std::uniform_int_distribution<std::size_t> len(0, 257);
  for (int i = 0; i < 300; ++i) {
    const std::uint32_t r = d(rng) % 200000 + 2, s0 = d(rng) % (1u << 30);
    const auto t = make_pair_filter_tables(r);
    const std::size_t n = len(rng);
    std::vector<std::uint8_t> a(n), b(n);
    scalar::pair_square_filter(t, s0, a);
    avx2::pair_square_filter(t, s0, b);
    CHECK(a == b);
  }
  for (int i = 0; i < 300; ++i) {
    const unsigned k = 2 + i % 3;
    const std::uint32_t bound = k == 4 ? 50000 : k == 3 ? 1000000 : 50000000;
    const std::uint32_t x = d(rng) % bound + 1, y0 = d(rng) % bound + 1;
    const std::size_t n = len(rng);
    std::vector<std::uint64_t> a(n), b(n);
    scalar::power_sum_row(k, x, y0, a);
    avx2::power_sum_row(k, x, y0, b);
    CHECK(a == b);
  }
  // large sums take the scalar fallback inside the AVX2 entry point
  std::vector<std::uint64_t> a(64), b(64);
  scalar::power_sum_row(4, 60000, 59000, a);
  avx2::power_sum_row(4, 60000, 59000, b);
  CHECK(a == b);
}
#endif

TEST_CASE("dispatch honours the forced ISA") {
  force_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  if (avx2_available()) {
    force_isa(Isa::avx2);
    CHECK(active_isa() == Isa::avx2);
  } else {
    CHECK_THROWS(force_isa(Isa::avx2));
  }
  force_isa(std::nullopt);
  CHECK(isa_name(Isa::scalar) == "scalar");
}
