#include "ndelta/simd.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define NDELTA_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace ndelta::simd::avx2 {

#ifdef NDELTA_HAVE_AVX2_KERNELS

namespace {

// Nibble-table popcount (Mula): per-byte counts, then horizontal sums via sad.
__attribute__((target("avx2"))) inline __m256i popcount_epi64(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

}  // namespace

__attribute__((target("avx2"))) std::size_t and_popcount(std::span<const std::uint64_t> a,
                                                          std::span<const std::uint64_t> b) {
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    const std::uint64_t* pa = a.data();
    const std::uint64_t* pb = b.data();
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pa + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pb + i));
        acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(va, vb)));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::size_t count = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) count += static_cast<std::size_t>(__builtin_popcountll(pa[i] & pb[i]));
    return count;
}

// Block-wise merge: compare a 4-lane block of `a` against all four rotations of
// a 4-lane block of `b`, then retire whichever block has the smaller maximum.
__attribute__((target("avx2"))) bool sorted_intersects(std::span<const std::uint64_t> a,
                                                       std::span<const std::uint64_t> b) {
    const std::uint64_t* pa = a.data();
    const std::uint64_t* pb = b.data();
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i + 4 <= na && j + 4 <= nb) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pa + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pb + j));
        __m256i hit = _mm256_cmpeq_epi64(va, vb);
        vb = _mm256_permute4x64_epi64(vb, 0x39);
        hit = _mm256_or_si256(hit, _mm256_cmpeq_epi64(va, vb));
        vb = _mm256_permute4x64_epi64(vb, 0x39);
        hit = _mm256_or_si256(hit, _mm256_cmpeq_epi64(va, vb));
        vb = _mm256_permute4x64_epi64(vb, 0x39);
        hit = _mm256_or_si256(hit, _mm256_cmpeq_epi64(va, vb));
        if (_mm256_movemask_epi8(hit) != 0) return true;
        const std::uint64_t amax = pa[i + 3];
        const std::uint64_t bmax = pb[j + 3];
        if (amax <= bmax) i += 4;
        if (bmax <= amax) j += 4;
    }
    while (i < na && j < nb) {
        if (pa[i] == pb[j]) return true;
        if (pa[i] < pb[j])
            ++i;
        else
            ++j;
    }
    return false;
}

#else

std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    return scalar::and_popcount(a, b);
}

bool sorted_intersects(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    return scalar::sorted_intersects(a, b);
}

#endif

}  // namespace ndelta::simd::avx2
