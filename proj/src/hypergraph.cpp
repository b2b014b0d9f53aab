#include "hypertile/hypergraph.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

namespace hypertile {

Hypergraph3::Hypergraph3(int n, std::vector<Edge> triples) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : triples) {
        std::sort(e.begin(), e.end());
        if (e[0] == e[1] || e[1] == e[2])
            throw std::invalid_argument("edge with repeated vertex");
        if (e[0] < 0 || e[2] >= n) throw std::invalid_argument("edge vertex out of range");
    }
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    edges_ = std::move(triples);
    incidence_.assign(n_, {});
    for (int idx = 0; idx < static_cast<int>(edges_.size()); ++idx)
        for (int v : edges_[idx]) incidence_[v].push_back(idx);
}

bool Hypergraph3::has_edge(int i, int j, int k) const {
    Edge e{i, j, k};
    std::sort(e.begin(), e.end());
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

long long Hypergraph3::degree(std::span<const int> s) const {
    if (s.size() != 1 && s.size() != 2)
        throw std::invalid_argument("degree takes a set of 1 or 2 vertices");
    for (int v : s)
        if (v < 0 || v >= n_) throw std::invalid_argument("degree vertex out of range");
    if (s.size() == 1) return degree1(s[0]);
    if (s[0] == s[1]) throw std::invalid_argument("degree pair with repeated vertex");
    return codegree(s[0], s[1]);
}

long long Hypergraph3::codegree(int u, int v) const {
    const auto& a = incidence_[u];
    const auto& b = incidence_[v];
    // merge over sorted incidence lists
    long long count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { ++count; ++i; ++j; }
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    return count;
}

long long Hypergraph3::min_vertex_degree() const {
    long long best = edges_.empty() && n_ == 0 ? 0 : LLONG_MAX;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree1(v));
    return n_ == 0 ? 0 : best;
}

long long Hypergraph3::min_pair_degree() const {
    if (n_ < 2) return 0;
    long long best = LLONG_MAX;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) best = std::min(best, codegree(u, v));
    return best;
}

std::vector<std::pair<int, int>> Hypergraph3::shadow() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges_.size() * 3);
    for (const auto& e : edges_) {
        pairs.emplace_back(e[0], e[1]);
        pairs.emplace_back(e[0], e[2]);
        pairs.emplace_back(e[1], e[2]);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

Hypergraph3 Hypergraph3::induced(std::span<const int> verts) const {
    std::vector<int> map(n_, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int v = verts[i];
        if (v < 0 || v >= n_) throw std::invalid_argument("induced vertex out of range");
        if (map[v] != -1) throw std::invalid_argument("induced vertex repeated");
        map[v] = static_cast<int>(i);
    }
    std::vector<Edge> sub;
    for (const auto& e : edges_) {
        if (map[e[0]] >= 0 && map[e[1]] >= 0 && map[e[2]] >= 0)
            sub.push_back({map[e[0]], map[e[1]], map[e[2]]});
    }
    return Hypergraph3(static_cast<int>(verts.size()), std::move(sub));
}

Hypergraph3 Hypergraph3::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (const auto& e : edges_) mapped.push_back({perm[e[0]], perm[e[1]], perm[e[2]]});
    return Hypergraph3(n_, std::move(mapped));
}

Hypergraph3 Hypergraph3::complete(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) es.push_back({i, j, k});
    return Hypergraph3(n, std::move(es));
}

Hypergraph3 Hypergraph3::complete_tripartite(int s1, int s2, int s3) {
    int n = s1 + s2 + s3;
    std::vector<Edge> es;
    for (int x = 0; x < s1; ++x)
        for (int y = s1; y < s1 + s2; ++y)
            for (int z = s1 + s2; z < n; ++z) es.push_back({x, y, z});
    return Hypergraph3(n, std::move(es));
}

double shadow_bound(double d, bool* in_range) {
    if (d < 0) throw std::invalid_argument("shadow_bound: negative density");
    const double hi = (47.0 - 5.0 * std::sqrt(57.0)) / 24.0;
    if (in_range) *in_range = d >= 0.25 && d <= hi;
    return 4.0 * std::sqrt(d) - 2.0 * d - 1.0;
}

VertexPartition::VertexPartition(int n, std::vector<std::vector<int>> parts) : n_(n) {
    if (parts.empty()) throw std::invalid_argument("partition needs at least V_0");
    owner_.assign(n, -1);
    for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
        auto& p = parts[i];
        std::sort(p.begin(), p.end());
        if (std::adjacent_find(p.begin(), p.end()) != p.end())
            throw std::invalid_argument("partition part with repeated vertex");
        if (i > 0 && p.empty()) throw std::invalid_argument("empty part V_" + std::to_string(i));
        for (int v : p) {
            if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
            if (owner_[v] != -1) throw std::invalid_argument("vertex in two parts");
            owner_[v] = i;
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner_[v] == -1) throw std::invalid_argument("unassigned vertex " + std::to_string(v));
    parts_ = std::move(parts);
}

}  // namespace hypertile
