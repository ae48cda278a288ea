// Compiled with -mavx2; only reached after the runtime CPU check.
#include <immintrin.h>

#include "hpdt/kernels.hpp"

namespace hpdt::kernels::avx2 {

void pair_square_filter(const PairFilterTables& tables, std::uint32_t s0,
                        std::span<std::uint8_t> mask) {
  const std::size_t n = mask.size();
  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  std::uint32_t residue[kNumFilterModuli];
  for (std::size_t j = 0; j < kNumFilterModuli; ++j) residue[j] = s0 % kFilterModuli[j];

  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i acc = _mm256_set1_epi32(-1);
    for (std::size_t j = 0; j < kNumFilterModuli; ++j) {
      const std::int32_t m = static_cast<std::int32_t>(kFilterModuli[j]);
      __m256i v = _mm256_add_epi32(_mm256_set1_epi32(static_cast<std::int32_t>(residue[j])), lane);
      // residue + lane < 2m since every modulus exceeds 8
      const __m256i wrap = _mm256_cmpgt_epi32(v, _mm256_set1_epi32(m - 1));
      v = _mm256_sub_epi32(v, _mm256_and_si256(wrap, _mm256_set1_epi32(m)));
      const __m256i pass = _mm256_i32gather_epi32(tables.pass[j].data(), v, 4);
      acc = _mm256_and_si256(acc, pass);
      residue[j] = (residue[j] + 8) % kFilterModuli[j];
    }
    const __m256i nonzero = _mm256_cmpgt_epi32(acc, _mm256_setzero_si256());
    const int bits = _mm256_movemask_ps(_mm256_castsi256_ps(nonzero));
    for (int b = 0; b < 8; ++b) mask[i + b] = static_cast<std::uint8_t>((bits >> b) & 1);
  }
  if (i < n) {
    scalar::pair_square_filter(tables, s0 + static_cast<std::uint32_t>(i), mask.subspan(i));
  }
}

void power_sum_row(unsigned k, std::uint32_t x, std::uint32_t y0, std::span<std::uint64_t> out) {
  const std::size_t n = out.size();
  if (n == 0) return;
  // doubles are exact below 2^53; the magic-number conversion needs < 2^52
  const long double top = static_cast<long double>(y0 + n - 1);
  long double largest = 1.0L, xl = 1.0L;
  for (unsigned e = 0; e < k; ++e) {
    largest *= top;
    xl *= x;
  }
  if (largest + xl >= 4503599627370496.0L) {
    scalar::power_sum_row(k, x, y0, out);
    return;
  }
  const __m256d xk = _mm256_set1_pd(static_cast<double>(xl));
  const __m256d magic = _mm256_set1_pd(4503599627370496.0);  // 2^52
  const __m256i magic_bits = _mm256_castpd_si256(magic);
  const __m128i lane = _mm_setr_epi32(0, 1, 2, 3);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i yi = _mm_add_epi32(_mm_set1_epi32(static_cast<std::int32_t>(y0 + i)), lane);
    const __m256d y = _mm256_cvtepi32_pd(yi);
    __m256d p = y;
    for (unsigned e = 1; e < k; ++e) p = _mm256_mul_pd(p, y);
    const __m256d sum = _mm256_add_pd(_mm256_add_pd(p, xk), magic);
    const __m256i bits = _mm256_sub_epi64(_mm256_castpd_si256(sum), magic_bits);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), bits);
  }
  if (i < n) scalar::power_sum_row(k, x, y0 + static_cast<std::uint32_t>(i), out.subspan(i));
}

}  // namespace hpdt::kernels::avx2
