#include "hypertile/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hypertile::kernels {

namespace {

struct Vtable {
    std::uint64_t (*popcount)(const std::uint64_t*, std::size_t);
    std::uint64_t (*and_popcount)(const std::uint64_t*, const std::uint64_t*, std::size_t);
    bool (*intersects)(const std::uint64_t*, const std::uint64_t*, std::size_t);
    std::size_t (*count_disjoint)(const std::uint64_t*, std::size_t, std::size_t, const std::uint64_t*);
    std::size_t (*collect_disjoint)(const std::uint64_t*, std::size_t, std::size_t, const std::uint64_t*,
                                    std::uint32_t*);
};

constexpr Vtable kScalar{scalar::popcount, scalar::and_popcount, scalar::intersects,
                         scalar::count_disjoint, scalar::collect_disjoint};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Vtable kAvx2{avx2::popcount, avx2::and_popcount, avx2::intersects, avx2::count_disjoint,
                       avx2::collect_disjoint};
bool avx2_supported() { return __builtin_cpu_supports("avx2"); }
#endif
#if defined(__aarch64__)
constexpr Vtable kNeon{neon::popcount, neon::and_popcount, neon::intersects, neon::count_disjoint,
                       neon::collect_disjoint};
#endif

struct State {
    const Vtable* vt = &kScalar;
    Backend backend = Backend::Scalar;
};

State& state() {
    static State s = [] {
        State init;
#if defined(__x86_64__) || defined(_M_X64)
        if (avx2_supported()) {
            init.vt = &kAvx2;
            init.backend = Backend::Avx2;
        }
#elif defined(__aarch64__)
        init.vt = &kNeon;
        init.backend = Backend::Neon;
#endif
        if (const char* env = std::getenv("HYPERTILE_KERNELS")) {
            if (std::strcmp(env, "scalar") == 0) {
                init.vt = &kScalar;
                init.backend = Backend::Scalar;
            }
#if defined(__x86_64__) || defined(_M_X64)
            else if (std::strcmp(env, "avx2") == 0 && avx2_supported()) {
                init.vt = &kAvx2;
                init.backend = Backend::Avx2;
            }
#endif
#if defined(__aarch64__)
            else if (std::strcmp(env, "neon") == 0) {
                init.vt = &kNeon;
                init.backend = Backend::Neon;
            }
#endif
        }
        return init;
    }();
    return s;
}

}  // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

std::vector<Backend> available_backends() {
    std::vector<Backend> v{Backend::Scalar};
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) v.push_back(Backend::Avx2);
#endif
#if defined(__aarch64__)
    v.push_back(Backend::Neon);
#endif
    return v;
}

Backend active_backend() { return state().backend; }

bool set_backend(Backend b) {
    switch (b) {
        case Backend::Scalar:
            state() = {&kScalar, Backend::Scalar};
            return true;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            if (avx2_supported()) {
                state() = {&kAvx2, Backend::Avx2};
                return true;
            }
#endif
            return false;
        case Backend::Neon:
#if defined(__aarch64__)
            state() = {&kNeon, Backend::Neon};
            return true;
#else
            return false;
#endif
    }
    return false;
}

std::uint64_t popcount(const std::uint64_t* w, std::size_t n) { return state().vt->popcount(w, n); }

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    return state().vt->and_popcount(a, b, n);
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    return state().vt->intersects(a, b, n);
}

std::size_t count_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                           const std::uint64_t* used) {
    return state().vt->count_disjoint(masks, count, stride, used);
}

std::size_t collect_disjoint(const std::uint64_t* masks, std::size_t count, std::size_t stride,
                             const std::uint64_t* used, std::uint32_t* out) {
    return state().vt->collect_disjoint(masks, count, stride, used, out);
}

}  // namespace hypertile::kernels
