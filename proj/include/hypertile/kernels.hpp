#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hypertile::kernels {

// Word-level primitives behind the enumeration and solver inner loops.
// Scalar versions are the reference semantics; SIMD variants are selected at
// runtime and must be bit-identical (equivalence-tested in the suite).

enum class Backend { Scalar, Avx2, Neon };

const char* backend_name(Backend b);
std::vector<Backend> available_backends();
Backend active_backend();

// Force a backend (tests, HYPERTILE_KERNELS=scalar|avx2|neon).
// Returns false if the backend is not available on this machine.
bool set_backend(Backend b);

namespace scalar {
std::uint64_t popcount(const std::uint64_t* w, std::size_t n);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
// masks: `count` masks of `stride` words each, contiguous. Counts masks
// disjoint from `used` (stride words).
std::size_t count_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                           const std::uint64_t* used);
// Writes indices of disjoint masks into out (caller sizes it >= count);
// returns how many were written.
std::size_t collect_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                             const std::uint64_t* used, std::uint32_t* out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
std::uint64_t popcount(const std::uint64_t* w, std::size_t n);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
std::size_t count_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                           const std::uint64_t* used);
std::size_t collect_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                             const std::uint64_t* used, std::uint32_t* out);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
std::uint64_t popcount(const std::uint64_t* w, std::size_t n);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
std::size_t count_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                           const std::uint64_t* used);
std::size_t collect_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                             const std::uint64_t* used, std::uint32_t* out);
}  // namespace neon
#endif

// Dispatched entry points (resolve to the active backend).
std::uint64_t popcount(const std::uint64_t* w, std::size_t n);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
std::size_t count_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                           const std::uint64_t* used);
std::size_t collect_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                             const std::uint64_t* used, std::uint32_t* out);

}  // namespace hypertile::kernels
