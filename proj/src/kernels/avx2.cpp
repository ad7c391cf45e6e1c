// Compiled with -mavx2. Only reached through dispatch after a CPU check.

#include <immintrin.h>

#include <bit>

#include "asymlink/kernels.hpp"

namespace asymlink::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 8;

inline __m256i load(const std::uint32_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

// Lane mask of `x` elements that equal some lane of `y`. All-pairs compare
// via the eight cyclic rotations of `y`.
inline unsigned match_mask(__m256i x, __m256i y) {
  const __m256i r1 = _mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 0);
  const __m256i r2 = _mm256_setr_epi32(2, 3, 4, 5, 6, 7, 0, 1);
  const __m256i r3 = _mm256_setr_epi32(3, 4, 5, 6, 7, 0, 1, 2);
  const __m256i r4 = _mm256_setr_epi32(4, 5, 6, 7, 0, 1, 2, 3);
  const __m256i r5 = _mm256_setr_epi32(5, 6, 7, 0, 1, 2, 3, 4);
  const __m256i r6 = _mm256_setr_epi32(6, 7, 0, 1, 2, 3, 4, 5);
  const __m256i r7 = _mm256_setr_epi32(7, 0, 1, 2, 3, 4, 5, 6);
  __m256i m = _mm256_cmpeq_epi32(x, y);
  m = _mm256_or_si256(m, _mm256_cmpeq_epi32(x, _mm256_permutevar8x32_epi32(y, r1)));
  m = _mm256_or_si256(m, _mm256_cmpeq_epi32(x, _mm256_permutevar8x32_epi32(y, r2)));
  m = _mm256_or_si256(m, _mm256_cmpeq_epi32(x, _mm256_permutevar8x32_epi32(y, r3)));
  m = _mm256_or_si256(m, _mm256_cmpeq_epi32(x, _mm256_permutevar8x32_epi32(y, r4)));
  m = _mm256_or_si256(m, _mm256_cmpeq_epi32(x, _mm256_permutevar8x32_epi32(y, r5)));
  m = _mm256_or_si256(m, _mm256_cmpeq_epi32(x, _mm256_permutevar8x32_epi32(y, r6)));
  m = _mm256_or_si256(m, _mm256_cmpeq_epi32(x, _mm256_permutevar8x32_epi32(y, r7)));
  return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(m)));
}

}  // namespace

std::size_t intersect_count(IdSpan a, IdSpan b) {
  const std::uint32_t* pa = a.data();
  const std::uint32_t* pb = b.data();
  std::size_t i = 0, j = 0, n = 0;
  while (i + kLanes <= a.size() && j + kLanes <= b.size()) {
    n += static_cast<std::size_t>(std::popcount(match_mask(load(pa + i), load(pb + j))));
    const std::uint32_t amax = pa[i + kLanes - 1];
    const std::uint32_t bmax = pb[j + kLanes - 1];
    if (amax <= bmax) i += kLanes;
    if (bmax <= amax) j += kLanes;
  }
  // Elements already passed on either side cannot match the remainder.
  while (i < a.size() && j < b.size()) {
    if (pa[i] < pb[j]) {
      ++i;
    } else if (pb[j] < pa[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::size_t intersect_positions(IdSpan a, IdSpan b, std::uint32_t* pos_a,
                                std::uint32_t* pos_b) {
  const std::uint32_t* pa = a.data();
  const std::uint32_t* pb = b.data();
  std::size_t i = 0, j = 0, n = 0;
  while (i + kLanes <= a.size() && j + kLanes <= b.size()) {
    const __m256i va = load(pa + i);
    const __m256i vb = load(pb + j);
    unsigned ma = match_mask(va, vb);
    if (ma != 0) {
      unsigned mb = match_mask(vb, va);
      // Matches are increasing on both sides, so the k-th set bit of `ma`
      // pairs with the k-th set bit of `mb`.
      while (ma != 0) {
        pos_a[n] = static_cast<std::uint32_t>(i + std::countr_zero(ma));
        pos_b[n] = static_cast<std::uint32_t>(j + std::countr_zero(mb));
        ++n;
        ma &= ma - 1;
        mb &= mb - 1;
      }
    }
    const std::uint32_t amax = pa[i + kLanes - 1];
    const std::uint32_t bmax = pb[j + kLanes - 1];
    if (amax <= bmax) i += kLanes;
    if (bmax <= amax) j += kLanes;
  }
  while (i < a.size() && j < b.size()) {
    if (pa[i] < pb[j]) {
      ++i;
    } else if (pb[j] < pa[i]) {
      ++j;
    } else {
      pos_a[n] = static_cast<std::uint32_t>(i);
      pos_b[n] = static_cast<std::uint32_t>(j);
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace asymlink::kernels::avx2
