#if defined(__x86_64__) || defined(_M_X64)

#include "hypertile/kernels.hpp"

#include <bit>
#include <immintrin.h>

// Compiled with -mavx2 in its own TU; only reached after the runtime cpuid
// check in the dispatcher.

namespace hypertile::kernels::avx2 {

namespace {

inline std::uint64_t hsum_popcnt(__m256i v) {
    alignas(32) std::uint64_t lane[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lane), v);
    return std::uint64_t(std::popcount(lane[0])) + std::popcount(lane[1]) +
           std::popcount(lane[2]) + std::popcount(lane[3]);
}

}  // namespace

std::uint64_t popcount(const std::uint64_t* w, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
        total += hsum_popcnt(v);
    }
    for (; i < n; ++i) total += std::popcount(w[i]);
    return total;
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        total += hsum_popcnt(_mm256_and_si256(va, vb));
    }
    for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        if (!_mm256_testz_si256(va, vb)) return true;
    }
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

std::size_t count_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                           const std::uint64_t* used) {
    if (stride != 1) return scalar::count_disjoint(masks, count, stride, used);
    const __m256i u = _mm256_set1_epi64x(static_cast<long long>(used[0]));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t hits = 0;
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
        __m256i anded = _mm256_and_si256(m, u);
        __m256i eq = _mm256_cmpeq_epi64(anded, zero);
        hits += std::popcount(static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(eq))));
    }
    for (; i < count; ++i) hits += (masks[i] & used[0]) == 0;
    return hits;
}

std::size_t collect_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                             const std::uint64_t* used, std::uint32_t* out) {
    if (stride != 1) return scalar::collect_disjoint(masks, count, stride, used, out);
    const __m256i u = _mm256_set1_epi64x(static_cast<long long>(used[0]));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t k = 0;
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
        __m256i eq = _mm256_cmpeq_epi64(_mm256_and_si256(m, u), zero);
        unsigned bits = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(eq)));
        while (bits) {
            unsigned lane = std::countr_zero(bits);
            out[k++] = static_cast<std::uint32_t>(i + lane);
            bits &= bits - 1;
        }
    }
    for (; i < count; ++i)
        if ((masks[i] & used[0]) == 0) out[k++] = static_cast<std::uint32_t>(i);
    return k;
}

}  // namespace hypertile::kernels::avx2

#endif  // x86_64
