#include <doctest.h>

#include <cstdint>
#include <vector>

#include "hypertile/kernels.hpp"
#include "hypertile/rng.hpp"

using namespace hypertile;
namespace k = hypertile::kernels;

namespace {

std::vector<std::uint64_t> random_words(Rng& rng, std::size_t n) {
    std::vector<std::uint64_t> w(n);
    for (auto& x : w) x = rng.next();
    return w;
}

}  // namespace

TEST_CASE("scalar kernel reference values") {
    std::vector<std::uint64_t> a{0xF0F0F0F0F0F0F0F0ULL, 0x1ULL};
    std::vector<std::uint64_t> b{0xFF00FF00FF00FF00ULL, 0x1ULL};
    CHECK(k::scalar::popcount(a.data(), 2) == 33);
    CHECK(k::scalar::and_popcount(a.data(), b.data(), 2) == 17);
    CHECK(k::scalar::intersects(a.data(), b.data(), 2));
    std::vector<std::uint64_t> zero{0, 0};
    CHECK_FALSE(k::scalar::intersects(a.data(), zero.data(), 2));
}

TEST_CASE("count/collect_disjoint scalar semantics") {
    // masks 0..7, used = 0b0101
    std::vector<std::uint64_t> masks{0b0001, 0b0010, 0b0100, 0b1000, 0b0110, 0b1010};
    std::uint64_t used = 0b0101;
    CHECK(k::scalar::count_disjoint(masks.data(), masks.size(), 1, &used) == 3);
    std::vector<std::uint32_t> out(masks.size());
    auto cnt = k::scalar::collect_disjoint(masks.data(), masks.size(), 1, &used, out.data());
    REQUIRE(cnt == 3);
    CHECK(out[0] == 1);
    CHECK(out[1] == 3);
    CHECK(out[2] == 5);
}

TEST_CASE("every available backend matches the scalar reference") {
    auto backends = k::available_backends();
    REQUIRE(!backends.empty());
    Rng rng(20250809);

    for (int trial = 0; trial < 200; ++trial) {
        std::size_t words = 1 + rng.below(9);
        auto a = random_words(rng, words);
        auto b = random_words(rng, words);
        std::size_t nmasks = 1 + rng.below(70);
        auto masks = random_words(rng, nmasks);
        // sparsify so disjoint cases actually occur
        for (auto& m : masks) m &= rng.next() & rng.next();
        std::uint64_t used = rng.next() & rng.next();

        auto ref_pop = k::scalar::popcount(a.data(), words);
        auto ref_and = k::scalar::and_popcount(a.data(), b.data(), words);
        auto ref_int = k::scalar::intersects(a.data(), b.data(), words);
        auto ref_cnt = k::scalar::count_disjoint(masks.data(), nmasks, 1, &used);
        std::vector<std::uint32_t> ref_idx(nmasks);
        auto ref_k = k::scalar::collect_disjoint(masks.data(), nmasks, 1, &used, ref_idx.data());
        ref_idx.resize(ref_k);

        for (auto backend : backends) {
            REQUIRE(k::set_backend(backend));
            CAPTURE(k::backend_name(backend));
            CHECK(k::popcount(a.data(), words) == ref_pop);
            CHECK(k::and_popcount(a.data(), b.data(), words) == ref_and);
            CHECK(k::intersects(a.data(), b.data(), words) == ref_int);
            CHECK(k::count_disjoint(masks.data(), nmasks, 1, &used) == ref_cnt);
            std::vector<std::uint32_t> idx(nmasks);
            auto got = k::collect_disjoint(masks.data(), nmasks, 1, &used, idx.data());
            idx.resize(got);
            CHECK(idx == ref_idx);
        }
    }
    k::set_backend(backends.back());
}

TEST_CASE("multiword stride dispatches correctly") {
    // two-word masks: mask[1] intersects used only in the second word
    std::vector<std::uint64_t> masks{0x1, 0x0, 0x0, 0x8, 0x0, 0x0};
    std::vector<std::uint64_t> used{0x0, 0x8};
    for (auto backend : k::available_backends()) {
        REQUIRE(k::set_backend(backend));
        CHECK(k::count_disjoint(masks.data(), 3, 2, used.data()) == 2);
    }
}
