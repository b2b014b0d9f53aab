#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypertile/hypergraph.hpp"
#include "hypertile/kspec.hpp"
#include "hypertile/rational.hpp"
#include "hypertile/tiler.hpp"

namespace hypertile {

// Exact-rational edge-vertex weighting on a host; absent pairs weigh 0.
// Edge indices refer to the host's canonical (sorted) edge order.
class FractionalHomTiling {
  public:
    FractionalHomTiling() = default;
    explicit FractionalHomTiling(Hypergraph3 host) : host_(std::move(host)) {}

    const Hypergraph3& host() const { return host_; }
    void set(int v, int edge_index, const Rational& w);
    Rational weight(int v, int edge_index) const;
    const std::map<std::pair<int, int>, Rational>& entries() const { return weights_; }

    // Sum of weights at v over all edges.
    Rational vertex_total(int v) const;
    // Sum of all weights, w(h).
    Rational total_weight() const;
    // Least positive weight; nullopt when all weights are zero.
    std::optional<Rational> min_positive() const;

  private:
    Hypergraph3 host_;
    std::map<std::pair<int, int>, Rational> weights_;
};

struct VerifyResult {
    bool valid = false;
    Rational weight;
    std::optional<Rational> hmin;
    std::string violation;  // empty when valid
};

// Checks the three defining conditions with exact arithmetic:
// (1) weight only on incident pairs, weights in [0,1];
// (2) per-vertex totals <= 1;
// (3) every edge has a labeling uvw with w(u)<=w(v)<=w(w) and
//     w(u)/a >= w(v)/b >= w(w)/c.
VerifyResult verify(const FractionalHomTiling& ft, const KSpec& spec);

// The standard weighting (1/(bc), 1/(ac), 1/(ab)) on every edge of K_{a,b,c};
// every vertex totals exactly 1 and w(h) = k.
FractionalHomTiling standard_weighting(const KSpec& spec);

enum class L1Case { ZNeighbor, YNeighborALtB, YNeighborAEqB };
enum class L2Case {
    C1_zz,
    C11_zy,
    C11_yy_zx,
    C12_two_zx_zy,
    C12_cross,
    C2_1,
    C2_2,
    C2_3,
    C2_3_coincident
};

const char* l1_case_name(L1Case c);
const char* l2_case_name(L2Case c);
std::optional<L1Case> parse_l1_case(const std::string& s);
std::optional<L2Case> parse_l2_case(const std::string& s);

struct GadgetResult {
    Hypergraph3 graph;
    FractionalHomTiling tiling;
    Rational weight;
    Rational hmin;
    std::string case_label;
    long long link_edges = 0;  // family-membership edge count (uu'v / uvw triples)
};

// Minimal member of the one-copy family (K_1 plus u,u' with a+1 link triples)
// carrying the case's exact weighting; weight >= k + 1/(abc), hmin >= 1/(bc^2).
GadgetResult gadget_L1(const KSpec& spec, L1Case c);

// Minimal member of the two-copy family (K_1, K_2 plus u with
// max{a^2+2a(b+c), (a+b)^2}+1 link triples); weight >= 2k + 1/(abc^2).
GadgetResult gadget_L2(const KSpec& spec, L2Case c);

struct ConvertResult {
    Tiling tiling;
    bool any_stalled = false;
    long long covered = 0;
};

// Converts a fractional hom(K)-tiling on the cluster graph R into an integer
// tiling of H: carve subsets of size floor(weight * cluster_size) per
// weighted cluster edge and run the regular-triple greedy with eps' = bc^2*eps.
ConvertResult convert_fractional(const Hypergraph3& h, const VertexPartition& p,
                                 const Hypergraph3& r, const FractionalHomTiling& ft,
                                 const KSpec& spec, const Rational& eps);

}  // namespace hypertile
