#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace hypertile {

// Splittable deterministic generator (splitmix64 core). Identical seeds give
// identical streams on every platform, which std::uniform_int_distribution
// does not guarantee.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Bernoulli(p) with p = num/den exactly.
    bool bernoulli(long long num, long long den) {
        if (num <= 0) return false;
        if (num >= den) return true;
        return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num);
    }

    // Independent child stream; derivation depends only on (seed, tag).
    Rng split(std::uint64_t tag) const {
        Rng child(state_ ^ (0xd1b54a32d192ed03ULL * (tag + 1)));
        child.next();
        return child;
    }

    // Uniform r-subset of {0..n-1}, sorted ascending.
    std::vector<int> sample_subset(int n, int r) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        for (int i = 0; i < r; ++i) {
            int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> out(pool.begin(), pool.begin() + r);
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    std::uint64_t state_;
};

}  // namespace hypertile
