#include "hpdt/kernels.hpp"

namespace hpdt::kernels {

PairFilterTables make_pair_filter_tables(std::uint32_t r) {
  PairFilterTables t;
  t.r = r;
  for (std::size_t i = 0; i < kNumFilterModuli; ++i) {
    const std::uint64_t m = kFilterModuli[i];
    std::vector<bool> square(m, false);
    for (std::uint64_t v = 0; v < m; ++v) square[v * v % m] = true;
    const std::uint64_t rr = static_cast<std::uint64_t>(r) % m * (r % m) % m;
    t.pass[i].resize(m);
    for (std::uint64_t s = 0; s < m; ++s) {
      const std::uint64_t ss = s * s % m;
      const std::uint64_t num = (ss * rr + m - 1) % m;
      const std::uint64_t den = (ss + m - rr) % m;
      t.pass[i][s] = square[num * den % m] ? 1 : 0;
    }
  }
  return t;
}

namespace scalar {

void pair_square_filter(const PairFilterTables& tables, std::uint32_t s0,
                        std::span<std::uint8_t> mask) {
  for (std::size_t i = 0; i < mask.size(); ++i) {
    const std::uint32_t s = s0 + static_cast<std::uint32_t>(i);
    std::uint8_t ok = 1;
    for (std::size_t j = 0; j < kNumFilterModuli && ok; ++j) {
      ok = static_cast<std::uint8_t>(tables.pass[j][s % kFilterModuli[j]]);
    }
    mask[i] = ok;
  }
}

void power_sum_row(unsigned k, std::uint32_t x, std::uint32_t y0, std::span<std::uint64_t> out) {
  auto power = [k](std::uint64_t v) {
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < k; ++i) acc *= v;
    return acc;
  };
  const std::uint64_t xk = power(x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = xk + power(y0 + i);
}

}  // namespace scalar
}  // namespace hpdt::kernels
