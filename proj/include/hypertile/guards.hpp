#pragma once

#include <cstdlib>
#include <string>

namespace hypertile {

// Enumeration guards. HYPERTILE_GUARD=<count>, when set, replaces every
// default guard limit; off by default.
inline long long guard_limit(long long def) {
    if (const char* env = std::getenv("HYPERTILE_GUARD")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return def;
}

namespace guards {
inline constexpr long long kCopyEnumeration = 10'000'000;   // max enumerated copies
inline constexpr long long kSubsetEnumeration = 10'000'000; // max enumerated subsets
inline constexpr long long kSolverNodes = 20'000'000;       // branch-and-bound node budget
inline constexpr long long kCertificateSamples = 100'000;   // sampled certificate checks
}  // namespace guards

}  // namespace hypertile
