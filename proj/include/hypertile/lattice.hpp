#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hypertile/hypergraph.hpp"
#include "hypertile/kspec.hpp"
#include "hypertile/rational.hpp"

namespace hypertile {

using IndexVector = std::vector<long long>;  // one coordinate per non-V0 part

// Coordinate j-1 = |S intersect V_j| for j in 1..r (V_0 ignored).
IndexVector index_vector(const VertexPartition& p, std::span<const int> s);

struct VectorCount {
    IndexVector vec;
    long long count = 0;
};

// Raw index-vector census of edges disjoint from V_0 (edges meeting V_0 are
// excluded; their index would not be a full 3-vector).
std::vector<VectorCount> edge_vector_counts(const Hypergraph3& h, const VertexPartition& p);

// Vectors with at least ceil(mu * n^3) edges.
std::vector<VectorCount> robust_edge_vectors(const Hypergraph3& h, const VertexPartition& p,
                                             const Rational& mu);

// Same census over copies of K (copies meeting V_0 excluded).
std::vector<VectorCount> k_vector_counts(const Hypergraph3& h, const VertexPartition& p,
                                         const KSpec& spec);

// Vectors with at least ceil(mu' * n^k) copies.
std::vector<VectorCount> robust_k_vectors(const Hypergraph3& h, const VertexPartition& p,
                                          const KSpec& spec, const Rational& mu_prime);

struct LatticeBasis {
    std::vector<IndexVector> generators;
};

struct MembershipResult {
    bool member = false;
    std::vector<long long> coeffs;  // witness: sum coeffs[i] * generators[i] = target
};

// Integer-lattice membership by row Hermite reduction with unimodular
// tracking; exact (checked 128-bit intermediates).
MembershipResult lattice_contains(const LatticeBasis& basis, const IndexVector& target);

struct TransferralResult {
    bool pass = false;
    std::vector<std::pair<int, int>> missing;  // (j,l) with u_j - u_l outside the lattice
    std::vector<VectorCount> k_vectors;        // the robust vectors used as generators
};

// Builds the robust K-vector lattice and tests u_j - u_l membership for all
// 1 <= j < l <= r. min_count, when given, replaces the mu'-threshold with a
// raw count (desk-scale mu' is degenerate at small n).
TransferralResult transferral_check(const Hypergraph3& h, const VertexPartition& p,
                                    const KSpec& spec, const Rational& mu_prime,
                                    std::optional<long long> min_count = std::nullopt);

}  // namespace hypertile
