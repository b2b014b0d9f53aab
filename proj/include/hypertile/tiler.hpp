#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hypertile/hypergraph.hpp"
#include "hypertile/kspec.hpp"
#include "hypertile/rational.hpp"

namespace hypertile {

// One copy of K_{a,b,c}: three disjoint classes whose cross triples are all
// edges of the host. Canonical form: classes sorted internally, ordered by
// (size, smallest element), so each copy has exactly one representation.
struct KCopy {
    std::array<std::vector<int>, 3> parts;

    static KCopy canonical(std::vector<int> p0, std::vector<int> p1, std::vector<int> p2);
    std::vector<int> vertices() const;  // sorted union
    int size() const;

    friend bool operator==(const KCopy& x, const KCopy& y) { return x.parts == y.parts; }
    friend bool operator<(const KCopy& x, const KCopy& y) { return x.parts < y.parts; }
};

// Every cross triple of the copy is an edge (the independent membership check).
bool copy_in_host(const Hypergraph3& h, const KCopy& copy);

struct Tiling {
    std::vector<KCopy> copies;

    std::vector<int> covered() const;
    long long covered_count() const;
    bool disjoint() const;
    bool perfect(int n) const { return covered_count() == n; }
};

// Streaming enumeration in deterministic (lexicographic) order; the callback
// returns false to stop early.
void for_each_copy(const Hypergraph3& h, const KSpec& spec,
                   const std::function<bool(const KCopy&)>& fn);

// All copies, canonical, each exactly once. Throws SizeLimitError past the
// enumeration guard (use for_each_copy to stream instead).
std::vector<KCopy> enumerate_copies(const Hypergraph3& h, const KSpec& spec);

// Copies whose vertex set contains v, streamed in deterministic order.
void for_each_copy_through(const Hypergraph3& h, const KSpec& spec, int v,
                           const std::function<bool(const KCopy&)>& fn);

long long count_copies_through(const Hypergraph3& h, const KSpec& spec, int v);

struct MaxTilingResult {
    Tiling tiling;
    bool optimal = true;  // false = node budget exhausted, size is a lower bound only
};

// Maximum-cardinality K-tiling by branch and bound over canonical copies;
// the witness is the lexicographically least optimal solution.
MaxTilingResult max_tiling(const Hypergraph3& h, const KSpec& spec);

// Perfect-tiling decision with witness; k | n is required, everything else is
// searched exactly.
std::optional<Tiling> has_perfect_tiling(const Hypergraph3& h, const KSpec& spec);

struct GreedyResult {
    Tiling tiling;
    bool stalled = false;         // a copy search failed before the size threshold
    bool invariant_held = true;   // ratio chain after every unequal-branch step
    std::array<long long, 3> leftover{0, 0, 0};  // residual sizes, ascending
};

// The regular-triple greedy: remove K_{a,b,c} from the residual triple
// (ascending sizes U1 <= U2 <= U3), as a role-rotated K_{k,k,k} batch when
// |U3| - |U1| <= c - a, until |U1| < eps*|V3| or a search fails.
// Requires |V1| <= |V2| <= |V3| and |V1|/a >= |V2|/b >= |V3|/c.
GreedyResult greedy_regular_tiling(const Hypergraph3& h, std::span<const int> v1,
                                   std::span<const int> v2, std::span<const int> v3,
                                   const KSpec& spec, const Rational& eps);

// Adds ceil(2*rho*n) universal vertices and every triple meeting them.
Hypergraph3 augment_universal(const Hypergraph3& h, const Rational& rho);

}  // namespace hypertile
