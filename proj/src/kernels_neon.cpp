#if defined(__aarch64__)

#include "hypertile/kernels.hpp"

#include <arm_neon.h>
#include <bit>

namespace hypertile::kernels::neon {

std::uint64_t popcount(const std::uint64_t* w, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint8x16_t v = vreinterpretq_u8_u64(vld1q_u64(w + i));
        total += vaddvq_u8(vcntq_u8(v));
    }
    for (; i < n; ++i) total += std::popcount(w[i]);
    return total;
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t va = vld1q_u64(a + i);
        uint64x2_t vb = vld1q_u64(b + i);
        uint8x16_t anded = vreinterpretq_u8_u64(vandq_u64(va, vb));
        total += vaddvq_u8(vcntq_u8(anded));
    }
    for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t anded = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if (vmaxvq_u32(vreinterpretq_u32_u64(anded)) != 0) return true;
    }
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

std::size_t count_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                           const std::uint64_t* used) {
    if (stride != 1) return scalar::count_disjoint(masks, count, stride, used);
    const uint64x2_t u = vdupq_n_u64(used[0]);
    std::size_t hits = 0;
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        uint64x2_t anded = vandq_u64(vld1q_u64(masks + i), u);
        hits += vgetq_lane_u64(anded, 0) == 0;
        hits += vgetq_lane_u64(anded, 1) == 0;
    }
    for (; i < count; ++i) hits += (masks[i] & used[0]) == 0;
    return hits;
}

std::size_t collect_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                             const std::uint64_t* used, std::uint32_t* out) {
    return scalar::collect_disjoint(masks, count, stride, used, out);
}

}  // namespace hypertile::kernels::neon

#endif  // aarch64
