#include "hypertile/absorb.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypertile/errors.hpp"
#include "hypertile/guards.hpp"
#include "hypertile/rng.hpp"
#include "hypertile/tiler.hpp"

namespace hypertile {

EpsilonReduction epsilon_reduction(const Hypergraph3& h, const Rational& eps) {
    if (eps <= Rational(0) || eps >= Rational(1))
        throw std::invalid_argument("epsilon_reduction: need 0 < eps < 1");
    const int n = h.n();
    const Rational weak_threshold = eps * eps * Rational(n);     // codegree <= eps^2 n
    const Rational removal_threshold = eps * Rational(binom(n, 2));  // weak edges >= eps*C(n,2)

    std::vector<char> weak(h.edge_count(), 0);
    std::vector<long long> weak_at(n, 0);
    long long weak_total = 0;
    for (int ei = 0; ei < h.edge_count(); ++ei) {
        const Edge& e = h.edges()[ei];
        bool is_weak = Rational(h.codegree(e[0], e[1])) <= weak_threshold ||
                       Rational(h.codegree(e[0], e[2])) <= weak_threshold ||
                       Rational(h.codegree(e[1], e[2])) <= weak_threshold;
        if (is_weak) {
            weak[ei] = 1;
            ++weak_total;
            for (int v : e) ++weak_at[v];
        }
    }

    EpsilonReduction out;
    out.weak_edges = weak_total;
    std::vector<char> kept(n, 1);
    for (int v = 0; v < n; ++v)
        if (Rational(weak_at[v]) >= removal_threshold) {
            kept[v] = 0;
            out.removed.push_back(v);
        }

    std::vector<Edge> strong;
    for (int ei = 0; ei < h.edge_count(); ++ei) {
        if (weak[ei]) continue;
        const Edge& e = h.edges()[ei];
        if (kept[e[0]] && kept[e[1]] && kept[e[2]]) strong.push_back(e);
    }
    out.reduced = Hypergraph3(n, std::move(strong));
    return out;
}

namespace {

bool induced_has_factor(const Hypergraph3& h, std::vector<int> verts, const KSpec& spec) {
    std::sort(verts.begin(), verts.end());
    return has_perfect_tiling(h.induced(verts), spec).has_value();
}

// enumerate r-subsets of pool via callback; returns false if stopped early
template <typename F>
void for_each_subset(const std::vector<int>& pool, int r, F&& fn) {
    const int n = static_cast<int>(pool.size());
    if (r > n) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::vector<int> subset(r);
    for (;;) {
        for (int i = 0; i < r; ++i) subset[i] = pool[idx[i]];
        if (!fn(subset)) return;
        int j = r - 1;
        while (j >= 0 && idx[j] == n - r + j) --j;
        if (j < 0) return;
        ++idx[j];
        for (int l = j + 1; l < r; ++l) idx[l] = idx[l - 1] + 1;
    }
}

}  // namespace

ReachabilityReport reachability_count(const Hypergraph3& h, int u, int v, const KSpec& spec,
                                      int i) {
    if (u == v) throw std::invalid_argument("reachability: u != v required");
    if (u < 0 || v < 0 || u >= h.n() || v >= h.n())
        throw std::invalid_argument("reachability: vertex out of range");
    if (i < 1) throw std::invalid_argument("reachability: depth i >= 1");
    const int wsize = i * spec.k - 1;
    const long long total = binom(h.n() - 2, wsize);
    if (total > guard_limit(guards::kSubsetEnumeration))
        throw SizeLimitError("reachability_count: witness enumeration guard exceeded");

    std::vector<int> pool;
    for (int x = 0; x < h.n(); ++x)
        if (x != u && x != v) pool.push_back(x);

    ReachabilityReport rep;
    rep.u = u;
    rep.v = v;
    rep.i = i;
    rep.total = total;
    for_each_subset(pool, wsize, [&](const std::vector<int>& w) {
        std::vector<int> with_u = w;
        with_u.push_back(u);
        if (induced_has_factor(h, with_u, spec)) {
            std::vector<int> with_v = w;
            with_v.push_back(v);
            if (induced_has_factor(h, with_v, spec)) ++rep.witness_count;
        }
        return true;
    });
    rep.normalized = total == 0 ? Rational(0) : Rational(rep.witness_count, total);
    return rep;
}

ReachabilityReport reachability_estimate(const Hypergraph3& h, int u, int v, const KSpec& spec,
                                         int i, long long samples, std::uint64_t seed) {
    if (u == v || u < 0 || v < 0 || u >= h.n() || v >= h.n())
        throw std::invalid_argument("reachability: bad endpoints");
    const int wsize = i * spec.k - 1;
    std::vector<int> pool;
    for (int x = 0; x < h.n(); ++x)
        if (x != u && x != v) pool.push_back(x);
    if (wsize > static_cast<int>(pool.size()))
        throw std::invalid_argument("reachability: witness larger than host");

    Rng rng(seed);
    ReachabilityReport rep;
    rep.u = u;
    rep.v = v;
    rep.i = i;
    rep.sampled = true;
    rep.samples = samples;
    rep.total = binom(h.n() - 2, wsize);
    long long hits = 0;
    for (long long t = 0; t < samples; ++t) {
        auto pick = rng.sample_subset(static_cast<int>(pool.size()), wsize);
        std::vector<int> w;
        for (int idx : pick) w.push_back(pool[idx]);
        std::vector<int> with_u = w;
        with_u.push_back(u);
        std::vector<int> with_v = w;
        with_v.push_back(v);
        if (induced_has_factor(h, with_u, spec) && induced_has_factor(h, with_v, spec)) ++hits;
    }
    rep.witness_count = hits;
    rep.normalized = samples == 0 ? Rational(0) : Rational(hits, samples);
    return rep;
}

bool is_absorbing_set(const Hypergraph3& h, std::span<const int> a_set, std::span<const int> s_set,
                      const KSpec& spec) {
    if (static_cast<int>(s_set.size()) != spec.k)
        throw std::invalid_argument("is_absorbing_set: |S| must be k");
    if (a_set.size() % spec.k != 0)
        throw std::invalid_argument("is_absorbing_set: k must divide |A|");
    std::vector<int> a(a_set.begin(), a_set.end());
    std::vector<int> s(s_set.begin(), s_set.end());
    std::sort(a.begin(), a.end());
    std::sort(s.begin(), s.end());
    std::vector<int> both;
    std::set_intersection(a.begin(), a.end(), s.begin(), s.end(), std::back_inserter(both));
    if (!both.empty()) throw std::invalid_argument("is_absorbing_set: A and S overlap");

    if (!induced_has_factor(h, a, spec)) return false;
    std::vector<int> un = a;
    un.insert(un.end(), s.begin(), s.end());
    return induced_has_factor(h, un, spec);
}

long long count_absorbing_sets(const Hypergraph3& h, std::span<const int> s_set, int m,
                               const KSpec& spec) {
    if (m % spec.k != 0) throw std::invalid_argument("count_absorbing_sets: k must divide m");
    std::vector<int> s(s_set.begin(), s_set.end());
    std::sort(s.begin(), s.end());
    const long long total = binom(h.n() - static_cast<long long>(s.size()), m);
    if (total > guard_limit(guards::kSubsetEnumeration))
        throw SizeLimitError("count_absorbing_sets: enumeration guard exceeded");

    std::vector<int> pool;
    for (int x = 0; x < h.n(); ++x)
        if (!std::binary_search(s.begin(), s.end(), x)) pool.push_back(x);

    long long count = 0;
    for_each_subset(pool, m, [&](const std::vector<int>& a) {
        if (is_absorbing_set(h, a, s, spec)) ++count;
        return true;
    });
    return count;
}

AbsorbingFamily build_absorbing_family(const Hypergraph3& h, const KSpec& spec, int i0,
                                       std::uint64_t seed, const Rational& p) {
    if (i0 < 1) throw std::invalid_argument("build_absorbing_family: i0 >= 1");
    if (p < Rational(0) || p > Rational(1))
        throw std::invalid_argument("build_absorbing_family: p in [0,1]");
    const int m = i0 * spec.k * spec.k - i0 * spec.k;
    AbsorbingFamily fam;
    fam.m = m;
    if (p.is_zero() || m > h.n()) return fam;

    // Binomial(C(n,m), p) many uniform m-sets, deduplicated, in draw order.
    const long long universe = binom(h.n(), m);
    Rng rng(seed);
    long long draws = 0;
    {
        // cap the simulated Bernoulli stream
        const long long cap = std::min<long long>(universe, guard_limit(guards::kSubsetEnumeration));
        for (long long t = 0; t < cap; ++t)
            if (rng.bernoulli(p.num(), p.den())) ++draws;
    }
    Rng pick_rng = rng.split(1);
    std::vector<std::vector<int>> sampled;
    for (long long t = 0; t < draws; ++t) {
        auto s = pick_rng.sample_subset(h.n(), m);
        if (std::find(sampled.begin(), sampled.end(), s) == sampled.end())
            sampled.push_back(std::move(s));
    }

    // keep earlier-sampled member of each intersecting pair
    std::vector<char> taken(h.n(), 0);
    std::vector<std::vector<int>> disjoint;
    for (auto& s : sampled) {
        bool clash = false;
        for (int v : s)
            if (taken[v]) {
                clash = true;
                break;
            }
        if (clash) continue;
        for (int v : s) taken[v] = 1;
        disjoint.push_back(std::move(s));
    }

    // keep only members that absorb some k-set (bounded witness scan)
    for (auto& a : disjoint) {
        std::vector<int> pool;
        for (int x = 0; x < h.n(); ++x)
            if (!std::binary_search(a.begin(), a.end(), x)) pool.push_back(x);
        std::optional<std::vector<int>> witness;
        long long budget = guard_limit(guards::kCertificateSamples);
        for_each_subset(pool, spec.k, [&](const std::vector<int>& s) {
            if (--budget < 0) return false;
            if (is_absorbing_set(h, a, s, spec)) {
                witness = s;
                return false;
            }
            return true;
        });
        if (witness) {
            fam.sets.push_back(a);
            fam.witnesses.push_back(*witness);
        } else {
            for (int v : a) taken[v] = 0;
        }
    }
    return fam;
}

VertexPartition reachability_partition(const Hypergraph3& h, const KSpec& spec,
                                       long long min_witnesses) {
    const int n = h.n();
    // union-find over the witnessed-reachability graph at depth 1
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> nonisolated(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto rep = reachability_count(h, u, v, spec, 1);
            if (rep.witness_count >= min_witnesses) {
                nonisolated[u] = nonisolated[v] = 1;
                parent[find(u)] = find(v);
            }
        }

    std::vector<std::vector<int>> groups;
    std::vector<int> group_of(n, -1);
    std::vector<int> v0;
    for (int v = 0; v < n; ++v) {
        if (!nonisolated[v]) {
            v0.push_back(v);
            continue;
        }
        int root = find(v);
        if (group_of[root] == -1) {
            group_of[root] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[group_of[root]].push_back(v);
    }
    std::vector<std::vector<int>> parts{v0};
    for (auto& g : groups) parts.push_back(std::move(g));
    return VertexPartition(n, std::move(parts));
}

}  // namespace hypertile
