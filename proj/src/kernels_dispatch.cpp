#include <atomic>
#include <stdexcept>

#include "hpdt/kernels.hpp"

namespace hpdt::kernels {

namespace {

// -1 auto, otherwise static_cast<int>(Isa)
std::atomic<int> g_forced{-1};

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(HPDT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

void force_isa(std::optional<Isa> isa) {
  if (isa == Isa::avx2 && !avx2_available()) {
    throw std::runtime_error("AVX2 kernels requested but not available on this CPU");
  }
  g_forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void pair_square_filter(const PairFilterTables& tables, std::uint32_t s0,
                        std::span<std::uint8_t> mask) {
#ifdef HPDT_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::pair_square_filter(tables, s0, mask);
#endif
  scalar::pair_square_filter(tables, s0, mask);
}

void power_sum_row(unsigned k, std::uint32_t x, std::uint32_t y0, std::span<std::uint64_t> out) {
#ifdef HPDT_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::power_sum_row(k, x, y0, out);
#endif
  scalar::power_sum_row(k, x, y0, out);
}

}  // namespace hpdt::kernels
