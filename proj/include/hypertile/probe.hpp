#pragma once

#include <cstdint>
#include <vector>

#include "hypertile/hypergraph.hpp"
#include "hypertile/kspec.hpp"
#include "hypertile/rational.hpp"

namespace hypertile {

// Random-host tileability probing around the threshold.
struct ProbeConfig {
    KSpec spec;
    int n = 0;                          // k | n
    std::vector<Rational> density_grid; // target delta_1 fractions in (0,1); 0 allowed (edgeless)
    int trials = 1;
    std::uint64_t seed = 1;
};

struct ProbeRow {
    Rational fraction;
    double mean_min_degree = 0;   // observed delta_1 average
    double tileable_share = 0;    // fraction of trials with a perfect tiling
};

// Edge probability p = fraction (expected vertex degree p*C(n-1,2)); observed
// minimum degrees reported since concentration fails at small n. Per-trial
// seeds derive from (seed, grid index, trial index); output is bit-identical
// across runs.
std::vector<ProbeRow> probe(const ProbeConfig& config);

// One uniform-p random host (shared by probe and tests).
Hypergraph3 random_host(int n, const Rational& p, std::uint64_t seed);

}  // namespace hypertile
