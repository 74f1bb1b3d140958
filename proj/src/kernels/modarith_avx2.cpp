#include "morava/kernels/modarith.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define MORAVA_HAVE_AVX2_VARIANT 1
#include <immintrin.h>
#else
#define MORAVA_HAVE_AVX2_VARIANT 0
#endif

#include <algorithm>
#include <vector>

namespace morava::kernels {

#if MORAVA_HAVE_AVX2_VARIANT
namespace {

#define MORAVA_AVX2 __attribute__((target("avx2")))

// Montgomery reduction with R = 2^32 needs an odd modulus below 2^31 so
// that t + u*m never overflows a 64-bit lane.
constexpr u64 kMontgomeryLimit = u64{1} << 31;

bool montgomery_ok(u64 m) { return (m & 1) != 0 && m < kMontgomeryLimit; }

// -m^{-1} mod 2^32 by Newton iteration on the 2-adic inverse.
u64 neg_inverse_32(u64 m) {
  std::uint32_t inv = 1;
  for (int i = 0; i < 5; ++i) inv *= 2 - static_cast<std::uint32_t>(m) * inv;
  return static_cast<std::uint32_t>(0u - inv);
}

struct MontgomeryLanes {
  __m256i m;
  __m256i m_minus_1;
  __m256i m_neg_inv;
};

MORAVA_AVX2 inline MontgomeryLanes make_lanes(u64 m) {
  return {_mm256_set1_epi64x(static_cast<long long>(m)),
          _mm256_set1_epi64x(static_cast<long long>(m - 1)),
          _mm256_set1_epi64x(static_cast<long long>(neg_inverse_32(m)))};
}

// Four lanes of a*b*2^{-32} mod m, fully reduced.
MORAVA_AVX2 inline __m256i mont_mul(__m256i a, __m256i b, const MontgomeryLanes& c) {
  const __m256i t = _mm256_mul_epu32(a, b);
  const __m256i u = _mm256_mul_epu32(t, c.m_neg_inv);
  const __m256i um = _mm256_mul_epu32(u, c.m);
  __m256i r = _mm256_srli_epi64(_mm256_add_epi64(t, um), 32);
  const __m256i over = _mm256_cmpgt_epi64(r, c.m_minus_1);
  return _mm256_sub_epi64(r, _mm256_and_si256(over, c.m));
}

MORAVA_AVX2 inline __m256i lane_add(__m256i a, __m256i b, __m256i m, __m256i m_minus_1) {
  const __m256i s = _mm256_add_epi64(a, b);
  const __m256i over = _mm256_cmpgt_epi64(s, m_minus_1);
  return _mm256_sub_epi64(s, _mm256_and_si256(over, m));
}

MORAVA_AVX2 inline __m256i load4(const u64* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
MORAVA_AVX2 inline void store4(u64* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

MORAVA_AVX2 void avx2_add(std::span<const u64> a, std::span<const u64> b, std::span<u64> out, u64 m) {
  const __m256i mv = _mm256_set1_epi64x(static_cast<long long>(m));
  const __m256i m1 = _mm256_set1_epi64x(static_cast<long long>(m - 1));
  std::size_t i = 0;
  for (; i + 4 <= out.size(); i += 4) {
    store4(out.data() + i, lane_add(load4(a.data() + i), load4(b.data() + i), mv, m1));
  }
  for (; i < out.size(); ++i) out[i] = add_mod(a[i], b[i], m);
}

MORAVA_AVX2 void avx2_sub(std::span<const u64> a, std::span<const u64> b, std::span<u64> out, u64 m) {
  const __m256i mv = _mm256_set1_epi64x(static_cast<long long>(m));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= out.size(); i += 4) {
    const __m256i d = _mm256_sub_epi64(load4(a.data() + i), load4(b.data() + i));
    const __m256i neg = _mm256_cmpgt_epi64(zero, d);
    store4(out.data() + i, _mm256_add_epi64(d, _mm256_and_si256(neg, mv)));
  }
  for (; i < out.size(); ++i) out[i] = sub_mod(a[i], b[i], m);
}

MORAVA_AVX2 void avx2_scale(std::span<const u64> a, u64 s, std::span<u64> out, u64 m) {
  if (!montgomery_ok(m)) {
    scalar_kernels().scale_mod(a, s, out, m);
    return;
  }
  const MontgomeryLanes lanes = make_lanes(m);
  // mont(a, s*R) = a*s.
  const u64 s_mont = mul_mod(s % m, (u64{1} << 32) % m, m);
  const __m256i sv = _mm256_set1_epi64x(static_cast<long long>(s_mont));
  std::size_t i = 0;
  for (; i + 4 <= out.size(); i += 4) store4(out.data() + i, mont_mul(load4(a.data() + i), sv, lanes));
  for (; i < out.size(); ++i) out[i] = mul_mod(a[i], s, m);
}

MORAVA_AVX2 void avx2_convolve(std::span<const u64> a, std::span<const u64> b, std::span<u64> out, u64 m) {
  if (!montgomery_ok(m) || b.empty()) {
    scalar_kernels().convolve_mod(a, b, out, m);
    return;
  }
  const MontgomeryLanes lanes = make_lanes(m);
  const u64 r_mod_m = (u64{1} << 32) % m;
  // Reversing b makes b[k - i] contiguous in i: b[k - i] == rb[nb - 1 - k + i].
  const std::size_t nb = b.size();
  std::vector<u64> rb(b.rbegin(), b.rend());

  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::size_t lo = k + 1 > nb ? k + 1 - nb : 0;
    const std::size_t hi = std::min(k + 1, a.size());
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = lo;
    for (; i + 4 <= hi; i += 4) {
      const __m256i prod = mont_mul(load4(a.data() + i), load4(rb.data() + (nb - 1 - k + i)), lanes);
      acc = lane_add(acc, prod, lanes.m, lanes.m_minus_1);
    }
    alignas(32) u64 lane_sums[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lane_sums), acc);
    u64 mont_sum = 0;
    for (u64 v : lane_sums) mont_sum = add_mod(mont_sum, v, m);
    // The vector part carries a factor 2^{-32}; undo it before adding the tail.
    u64 total = mul_mod(mont_sum, r_mod_m, m);
    for (; i < hi; ++i) total = add_mod(total, mul_mod(a[i], b[k - i], m), m);
    out[k] = total;
  }
}

}  // namespace

const KernelTable* avx2_kernels() noexcept {
  static const bool supported = __builtin_cpu_supports("avx2");
  static const KernelTable table{Isa::avx2, avx2_add, avx2_sub, avx2_scale, avx2_convolve};
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_kernels() noexcept { return nullptr; }

#endif

}  // namespace morava::kernels
