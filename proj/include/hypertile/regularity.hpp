#pragma once

#include <span>

#include "hypertile/hypergraph.hpp"
#include "hypertile/rational.hpp"

namespace hypertile {

// Number of cross edges (one vertex in each set).
long long cross_edges(const Hypergraph3& h, std::span<const int> v1, std::span<const int> v2,
                      std::span<const int> v3);

// d(V1,V2,V3) = e(V1,V2,V3) / (|V1||V2||V3|), exact.
Rational tripartite_density(const Hypergraph3& h, std::span<const int> v1, std::span<const int> v2,
                            std::span<const int> v3);

// Exact (eps,d)-regularity: |d(A1,A2,A3) - d| <= eps for all Ai subsets of Vi
// with |Ai| >= eps*|Vi| (non-strict on both sides). Exhaustive; parts above
// the enumeration guard (14 vertices) raise SizeLimitError.
bool is_regular(const Hypergraph3& h, std::span<const int> v1, std::span<const int> v2,
                std::span<const int> v3, const Rational& eps, const Rational& d);

// eps-regularity at the observed density d(V1,V2,V3) (the existential
// wrapper; the paper's "(eps,d)-regular for some d >= 0" is checked here at
// d = observed density).
bool is_regular_existential(const Hypergraph3& h, std::span<const int> v1, std::span<const int> v2,
                            std::span<const int> v3, const Rational& eps);

// Cluster 3-graph on clusters V_1..V_t of P (V_0 exempt; clusters must share
// one size): {i,j,l} is an edge iff the triple is eps-regular and its density
// is >= d.
Hypergraph3 cluster_hypergraph(const Hypergraph3& h, const VertexPartition& p, const Rational& eps,
                               const Rational& d);

}  // namespace hypertile
