#include "hypertile/regularity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hypertile/errors.hpp"

namespace hypertile {

namespace {

void check_triple(const Hypergraph3& h, std::span<const int> v1, std::span<const int> v2,
                  std::span<const int> v3) {
    if (v1.empty() || v2.empty() || v3.empty())
        throw std::invalid_argument("tripartite density: empty set");
    std::vector<int> seen(h.n(), 0);
    for (auto part : {v1, v2, v3})
        for (int v : part) {
            if (v < 0 || v >= h.n()) throw std::invalid_argument("vertex out of range");
            if (seen[v]++) throw std::invalid_argument("tripartite sets overlap");
        }
}

constexpr int kPartGuard = 14;

}  // namespace

long long cross_edges(const Hypergraph3& h, std::span<const int> v1, std::span<const int> v2,
                      std::span<const int> v3) {
    long long count = 0;
    for (int x : v1)
        for (int y : v2)
            for (int z : v3)
                if (h.has_edge(x, y, z)) ++count;
    return count;
}

Rational tripartite_density(const Hypergraph3& h, std::span<const int> v1, std::span<const int> v2,
                            std::span<const int> v3) {
    check_triple(h, v1, v2, v3);
    long long e = cross_edges(h, v1, v2, v3);
    return Rational(e, static_cast<long long>(v1.size()) * v2.size() * v3.size());
}

bool is_regular(const Hypergraph3& h, std::span<const int> v1, std::span<const int> v2,
                std::span<const int> v3, const Rational& eps, const Rational& d) {
    check_triple(h, v1, v2, v3);
    if (eps <= Rational(0)) throw std::invalid_argument("is_regular: eps must be positive");
    const int n1 = static_cast<int>(v1.size());
    const int n2 = static_cast<int>(v2.size());
    const int n3 = static_cast<int>(v3.size());
    if (n1 > kPartGuard || n2 > kPartGuard || n3 > kPartGuard)
        throw SizeLimitError("is_regular: part above exhaustive-enumeration guard");

    // Size thresholds: |Ai| >= eps*|Vi|, non-strict.
    const int t1 = static_cast<int>(ceil_scaled(eps, n1));
    const int t2 = static_cast<int>(ceil_scaled(eps, n2));
    const int t3 = static_cast<int>(ceil_scaled(eps, n3));
    if (t1 > n1 || t2 > n2 || t3 > n3) return true;  // no admissible triple

    // cnt[x][y] -> bitset over v3 of edges {v1[x], v2[y], v3[z]}.
    std::vector<std::vector<std::uint32_t>> link(n1, std::vector<std::uint32_t>(n2, 0));
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n2; ++y)
            for (int z = 0; z < n3; ++z)
                if (h.has_edge(v1[x], v2[y], v3[z])) link[x][y] |= 1u << z;

    // Bounds d-eps <= density <= d+eps as exact rationals.
    const Rational lo = d - eps;
    const Rational hi = d + eps;

    std::vector<int> zcnt(n3);
    for (std::uint32_t a1 = 1; a1 < (1u << n1); ++a1) {
        const int s1 = std::popcount(a1);
        if (s1 < t1) continue;
        // per-(y,z) counts of chosen x's
        std::vector<std::vector<int>> yz(n2, std::vector<int>(n3, 0));
        for (int y = 0; y < n2; ++y)
            for (int x = 0; x < n1; ++x)
                if (a1 & (1u << x)) {
                    std::uint32_t row = link[x][y];
                    while (row) {
                        int z = std::countr_zero(row);
                        yz[y][z] += 1;
                        row &= row - 1;
                    }
                }
        for (std::uint32_t a2 = 1; a2 < (1u << n2); ++a2) {
            const int s2 = std::popcount(a2);
            if (s2 < t2) continue;
            std::fill(zcnt.begin(), zcnt.end(), 0);
            for (int y = 0; y < n2; ++y)
                if (a2 & (1u << y))
                    for (int z = 0; z < n3; ++z) zcnt[z] += yz[y][z];
            // Max/min density over A3 with |A3| >= t3: prefix averages of the
            // sorted per-vertex counts, extremal at size exactly t3.
            std::vector<int> sorted(zcnt.begin(), zcnt.end());
            std::sort(sorted.begin(), sorted.end());
            long long minsum = 0, maxsum = 0;
            for (int i = 0; i < t3; ++i) minsum += sorted[i];
            for (int i = 0; i < t3; ++i) maxsum += sorted[n3 - 1 - i];
            const long long denom = static_cast<long long>(s1) * s2 * t3;
            if (Rational(maxsum, denom) > hi) return false;
            if (Rational(minsum, denom) < lo) return false;
        }
    }
    return true;
}

bool is_regular_existential(const Hypergraph3& h, std::span<const int> v1, std::span<const int> v2,
                            std::span<const int> v3, const Rational& eps) {
    return is_regular(h, v1, v2, v3, eps, tripartite_density(h, v1, v2, v3));
}

Hypergraph3 cluster_hypergraph(const Hypergraph3& h, const VertexPartition& p, const Rational& eps,
                               const Rational& d) {
    const int t = p.r();
    if (t < 3) throw std::invalid_argument("cluster_hypergraph: need at least 3 clusters");
    const std::size_t size = p.part(1).size();
    for (int i = 2; i <= t; ++i)
        if (p.part(i).size() != size)
            throw std::invalid_argument("cluster_hypergraph: clusters must share one size");
    std::vector<Edge> edges;
    for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j)
            for (int l = j + 1; l <= t; ++l) {
                const auto& vi = p.part(i);
                const auto& vj = p.part(j);
                const auto& vl = p.part(l);
                if (tripartite_density(h, vi, vj, vl) >= d &&
                    is_regular_existential(h, vi, vj, vl, eps))
                    edges.push_back({i - 1, j - 1, l - 1});
            }
    return Hypergraph3(t, std::move(edges));
}

}  // namespace hypertile
