#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypertile/hypergraph.hpp"
#include "hypertile/kspec.hpp"
#include "hypertile/rational.hpp"

namespace hypertile {

struct EpsilonReduction {
    Hypergraph3 reduced;        // same vertex ids; strong edges on kept vertices only
    std::vector<int> removed;   // vertices in >= eps*C(n,2) weak edges
    long long weak_edges = 0;
};

// Weak edge: some pair inside it has codegree <= eps^2 * n. Removes vertices
// lying in >= eps*C(n,2) weak edges and keeps the strong edges among the rest.
EpsilonReduction epsilon_reduction(const Hypergraph3& h, const Rational& eps);

struct ReachabilityReport {
    int u = 0, v = 0, i = 1;
    long long witness_count = 0;
    long long total = 0;        // C(n-2, ik-1)
    Rational normalized;        // witness_count / total
    bool sampled = false;
    long long samples = 0;
};

// Counts (ik-1)-sets W (disjoint from {u,v}) with K-factors on both
// H[{u} u W] and H[{v} u W]. Exhaustive under the guard; otherwise throws
// SizeLimitError (use the sampling estimator).
ReachabilityReport reachability_count(const Hypergraph3& h, int u, int v, const KSpec& spec, int i);

// Seeded estimator above the guard; reports sampled=true.
ReachabilityReport reachability_estimate(const Hypergraph3& h, int u, int v, const KSpec& spec,
                                         int i, long long samples, std::uint64_t seed);

// A (with k | |A|) absorbs S (|S| = k): both H[A] and H[A u S] have K-factors.
bool is_absorbing_set(const Hypergraph3& h, std::span<const int> a_set, std::span<const int> s_set,
                      const KSpec& spec);

// Exact |A^m(S)| by enumeration (guard on C(n-k, m)).
long long count_absorbing_sets(const Hypergraph3& h, std::span<const int> s_set, int m,
                               const KSpec& spec);

struct AbsorbingFamily {
    int m = 0;
    std::vector<std::vector<int>> sets;       // pairwise disjoint absorbing m-sets
    std::vector<std::vector<int>> witnesses;  // a k-set each member absorbs
};

// Seeded randomized family: sample m-sets with probability p each, drop
// later members of intersecting pairs, drop members that absorb no k-set.
// Structural invariants only; no tail-bound claims.
AbsorbingFamily build_absorbing_family(const Hypergraph3& h, const KSpec& spec, int i0,
                                       std::uint64_t seed, const Rational& p);

// Components of the graph "u ~ v iff witness count at depth 1 >= min_witnesses";
// isolated vertices land in V_0.
VertexPartition reachability_partition(const Hypergraph3& h, const KSpec& spec,
                                       long long min_witnesses);

}  // namespace hypertile
