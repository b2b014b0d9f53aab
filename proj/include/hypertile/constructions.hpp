#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypertile/hypergraph.hpp"
#include "hypertile/kspec.hpp"
#include "hypertile/tiler.hpp"

namespace hypertile {

// An extremal example with its defining partition, the closed-form minimum
// vertex degree at this n, and enough structure for the arithmetic
// non-tileability certificate to be re-checked.
struct BarrierInstance {
    BarrierKind kind;
    KSpec spec;
    int n = 0;
    Hypergraph3 graph;
    VertexPartition parts;  // V_0 empty; V_1.. the construction's parts (apex = own part for Tiling)
    long long predicted_min_degree = 0;
    std::string certificate;  // one-line arithmetic reason no perfect tiling exists
};

// Part sizes the generator would use (floor rounding; DivII/DivIII scan their
// candidate windows). Throws ConstructionNotApplicable / InfeasibleSize.
std::vector<int> barrier_part_sizes(BarrierKind kind, const KSpec& spec, int n);

BarrierInstance generate(BarrierKind kind, const KSpec& spec, int n);

long long predicted_degree(BarrierKind kind, const KSpec& spec, int n);

struct CertificateResult {
    bool ok = false;
    bool sampled = false;  // copy-class check sampled above the enumeration guard
    std::string detail;
    std::optional<KCopy> violating_copy;
};

// Re-verifies the instance's arithmetic certificate: the kind's copy-class
// rule over enumerated (or sampled) copies plus the divisibility/coverage
// obstruction.
CertificateResult check_certificate(const BarrierInstance& inst, std::uint64_t sample_seed = 1);

// Section-5 style generator for r-uniform space barriers: every edge meets
// A_i in at least i vertices. Generate-only (no r-uniform solver).
struct RUniformBarrier {
    int r = 3;
    int i = 1;
    std::vector<int> sizes;  // a_1 <= ... <= a_r
    int n = 0;
    int part_a = 0;                       // |A_i|
    std::vector<std::vector<int>> edges;  // sorted r-sets, A = {0..part_a-1}
};

RUniformBarrier generate_general(int r, int i, std::vector<int> sizes, int n);

// Degree of a d-subset in the r-uniform barrier (brute force).
long long r_uniform_degree(const RUniformBarrier& inst, const std::vector<int>& dset);

}  // namespace hypertile
