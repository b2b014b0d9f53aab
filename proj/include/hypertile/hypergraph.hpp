#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypertile/rational.hpp"

namespace hypertile {

using Edge = std::array<int, 3>;  // strictly increasing vertices

// 3-uniform hypergraph on vertices 0..n-1. Edges are kept sorted and unique;
// their position in `edges` is the canonical edge index used by the weight
// file format and the fractional module.
class Hypergraph3 {
  public:
    Hypergraph3() = default;
    Hypergraph3(int n, std::vector<Edge> triples);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }

    bool has_edge(int i, int j, int k) const;

    // Edges containing the vertex / pair.
    const std::vector<int>& incident(int v) const { return incidence_[v]; }
    long long degree(std::span<const int> s) const;
    long long degree1(int v) const { return static_cast<long long>(incidence_[v].size()); }
    long long codegree(int u, int v) const;

    long long min_vertex_degree() const;   // delta_1
    long long min_pair_degree() const;     // delta_2

    // Pairs covered by at least one edge, sorted.
    std::vector<std::pair<int, int>> shadow() const;

    // Subgraph induced on `verts` (sorted unique), vertices relabeled 0..|verts|-1.
    Hypergraph3 induced(std::span<const int> verts) const;

    // Image under a vertex permutation perm (perm[v] = new label).
    Hypergraph3 relabeled(std::span<const int> perm) const;

    static Hypergraph3 complete(int n);
    // Complete 3-partite host on consecutive blocks of the given sizes.
    static Hypergraph3 complete_tripartite(int s1, int s2, int s3);

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;
};

// g(d) = 4*sqrt(d) - 2d - 1, the shadow lower-bound coefficient. Valid input
// range is [1/4, (47 - 5*sqrt(57))/24]; outside it the value is still
// computed and *in_range reports false. Negative d throws.
double shadow_bound(double d, bool* in_range = nullptr);

// Partition V_0, V_1, ..., V_r of the host's vertex set (V_0 may be empty,
// the others may not; every vertex in exactly one part).
class VertexPartition {
  public:
    VertexPartition() = default;
    // parts[0] = V_0. Validates disjointness and exact cover of 0..n-1.
    VertexPartition(int n, std::vector<std::vector<int>> parts);

    int n() const { return n_; }
    int r() const { return static_cast<int>(parts_.size()) - 1; }
    const std::vector<int>& part(int i) const { return parts_[i]; }
    const std::vector<std::vector<int>>& parts() const { return parts_; }
    // Index of the part containing v (0 = V_0).
    int part_of(int v) const { return owner_[v]; }

  private:
    int n_ = 0;
    std::vector<std::vector<int>> parts_;
    std::vector<int> owner_;
};

}  // namespace hypertile
