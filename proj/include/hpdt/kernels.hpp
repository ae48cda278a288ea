#pragma once

// Data-parallel inner loops of the searches. Each kernel has a scalar
// reference implementation and an AVX2 variant; the dispatcher picks AVX2
// when the CPU supports it unless a scalar run is forced.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace hpdt::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool avx2_available();
/// The ISA the dispatching entry points use right now.
Isa active_isa();
/// Pin the dispatch (nullopt restores auto-detection). Throws if AVX2 is
/// requested on a CPU without it.
void force_isa(std::optional<Isa> isa);

/// Small moduli for the quadratic-residue prefilter.
inline constexpr std::uint32_t kFilterModuli[] = {64, 63, 65, 11, 17, 19, 23, 29, 31, 37};
inline constexpr std::size_t kNumFilterModuli = std::size(kFilterModuli);

/// Per-r lookup tables: pass[m][s mod m] != 0 iff (s^2 r^2 - 1)(s^2 - r^2)
/// is a square modulo m.
struct PairFilterTables {
  std::uint32_t r = 0;
  std::vector<std::int32_t> pass[kNumFilterModuli];
};

PairFilterTables make_pair_filter_tables(std::uint32_t r);

/// mask[i] = 1 if s = s0 + i passes every residue test (a necessary
/// condition for (s^2 r^2 - 1)/(s^2 - r^2) to be a rational square).
void pair_square_filter(const PairFilterTables& tables, std::uint32_t s0,
                        std::span<std::uint8_t> mask);

/// out[i] = x^k + (y0 + i)^k. Caller guarantees the largest sum < 2^63.
void power_sum_row(unsigned k, std::uint32_t x, std::uint32_t y0, std::span<std::uint64_t> out);

namespace scalar {
void pair_square_filter(const PairFilterTables& tables, std::uint32_t s0,
                        std::span<std::uint8_t> mask);
void power_sum_row(unsigned k, std::uint32_t x, std::uint32_t y0, std::span<std::uint64_t> out);
}  // namespace scalar

namespace avx2 {
void pair_square_filter(const PairFilterTables& tables, std::uint32_t s0,
                        std::span<std::uint8_t> mask);
void power_sum_row(unsigned k, std::uint32_t x, std::uint32_t y0, std::span<std::uint64_t> out);
}  // namespace avx2

}  // namespace hpdt::kernels
