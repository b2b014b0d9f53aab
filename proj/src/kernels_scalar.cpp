#include "hypertile/kernels.hpp"

#include <bit>

namespace hypertile::kernels::scalar {

std::uint64_t popcount(const std::uint64_t* w, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(w[i]);
    return total;
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

std::size_t count_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                           const std::uint64_t* used) {
    std::size_t hits = 0;
    if (stride == 1) {
        const std::uint64_t u = used[0];
        for (std::size_t i = 0; i < count; ++i) hits += (masks[i] & u) == 0;
        return hits;
    }
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t* m = masks + i * stride;
        std::uint64_t overlap = 0;
        for (std::size_t w = 0; w < stride; ++w) overlap |= m[w] & used[w];
        hits += overlap == 0;
    }
    return hits;
}

std::size_t collect_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                             const std::uint64_t* used, std::uint32_t* out) {
    std::size_t k = 0;
    if (stride == 1) {
        const std::uint64_t u = used[0];
        for (std::size_t i = 0; i < count; ++i)
            if ((masks[i] & u) == 0) out[k++] = static_cast<std::uint32_t>(i);
        return k;
    }
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t* m = masks + i * stride;
        std::uint64_t overlap = 0;
        for (std::size_t w = 0; w < stride; ++w) overlap |= m[w] & used[w];
        if (overlap == 0) out[k++] = static_cast<std::uint32_t>(i);
    }
    return k;
}

}  // namespace hypertile::kernels::scalar
