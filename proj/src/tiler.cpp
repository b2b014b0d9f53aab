#include "hypertile/tiler.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "hypertile/errors.hpp"
#include "hypertile/guards.hpp"
#include "hypertile/kernels.hpp"

namespace hypertile {

KCopy KCopy::canonical(std::vector<int> p0, std::vector<int> p1, std::vector<int> p2) {
    KCopy c;
    c.parts = {std::move(p0), std::move(p1), std::move(p2)};
    for (auto& p : c.parts) std::sort(p.begin(), p.end());
    std::sort(c.parts.begin(), c.parts.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.front() < y.front();
    });
    return c;
}

std::vector<int> KCopy::vertices() const {
    std::vector<int> v;
    for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
    std::sort(v.begin(), v.end());
    return v;
}

int KCopy::size() const {
    return static_cast<int>(parts[0].size() + parts[1].size() + parts[2].size());
}

bool copy_in_host(const Hypergraph3& h, const KCopy& copy) {
    for (int x : copy.parts[0])
        for (int y : copy.parts[1])
            for (int z : copy.parts[2])
                if (!h.has_edge(x, y, z)) return false;
    return true;
}

std::vector<int> Tiling::covered() const {
    std::vector<int> v;
    for (const auto& c : copies) {
        auto cv = c.vertices();
        v.insert(v.end(), cv.begin(), cv.end());
    }
    std::sort(v.begin(), v.end());
    return v;
}

long long Tiling::covered_count() const {
    long long total = 0;
    for (const auto& c : copies) total += c.size();
    return total;
}

bool Tiling::disjoint() const {
    auto v = covered();
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

namespace {

// Enumerates copies with class roles (a,b,c) drawn from candidate pools
// (X,Y,Z): A in X, B in Y, C in Z, all cross triples edges. Pools may
// coincide (the general enumeration passes the whole vertex set three times).
// Symmetry constraints dedupe equal-size classes by smallest element.
struct CopySearch {
    const Hypergraph3& h;
    int a, b, c;
    bool dedupe_ab, dedupe_bc;  // enforce min(A)<min(B) / min(B)<min(C)
    const std::function<bool(const KCopy&)>& fn;
    bool stopped = false;

    std::vector<int> A, B;

    // pairs_ok[y][z]: every x in A forms an edge xyz
    std::vector<std::vector<char>> pair_ok;

    void run(std::span<const int> xs, std::span<const int> ys, std::span<const int> zs) {
        A.clear();
        chooseA(xs, ys, zs, 0);
    }

    void chooseA(std::span<const int> xs, std::span<const int> ys, std::span<const int> zs,
                 std::size_t from) {
        if (stopped) return;
        if (static_cast<int>(A.size()) == a) {
            buildPairTable(ys, zs);
            B.clear();
            std::vector<char> zalive(zs.size(), 1);
            chooseB(ys, zs, 0, zalive);
            return;
        }
        for (std::size_t i = from; i < xs.size(); ++i) {
            if (xs.size() - i < static_cast<std::size_t>(a) - A.size()) break;
            A.push_back(xs[i]);
            chooseA(xs, ys, zs, i + 1);
            A.pop_back();
            if (stopped) return;
        }
    }

    void buildPairTable(std::span<const int> ys, std::span<const int> zs) {
        pair_ok.assign(ys.size(), std::vector<char>(zs.size(), 1));
        for (std::size_t yi = 0; yi < ys.size(); ++yi)
            for (std::size_t zi = 0; zi < zs.size(); ++zi) {
                if (ys[yi] == zs[zi]) { pair_ok[yi][zi] = 0; continue; }
                for (int x : A)
                    if (x == ys[yi] || x == zs[zi] || !h.has_edge(x, ys[yi], zs[zi])) {
                        pair_ok[yi][zi] = 0;
                        break;
                    }
            }
    }

    void chooseB(std::span<const int> ys, std::span<const int> zs, std::size_t from,
                 std::vector<char>& zalive) {
        if (stopped) return;
        if (static_cast<int>(B.size()) == b) {
            emitC(zs, zalive);
            return;
        }
        for (std::size_t i = from; i < ys.size(); ++i) {
            if (ys.size() - i < static_cast<std::size_t>(b) - B.size()) break;
            int y = ys[i];
            if (std::find(A.begin(), A.end(), y) != A.end()) continue;
            if (dedupe_ab && B.empty() && y < A.front()) continue;
            // shrink the Z candidate set
            std::vector<std::size_t> killed;
            bool viable = true;
            int alive = 0;
            for (std::size_t zi = 0; zi < zs.size(); ++zi) {
                if (!zalive[zi]) continue;
                if (!pair_ok[i][zi]) {
                    zalive[zi] = 0;
                    killed.push_back(zi);
                } else {
                    ++alive;
                }
            }
            viable = alive >= c;
            if (viable) {
                B.push_back(y);
                chooseB(ys, zs, i + 1, zalive);
                B.pop_back();
            }
            for (auto zi : killed) zalive[zi] = 1;
            if (stopped) return;
        }
    }

    void emitC(std::span<const int> zs, const std::vector<char>& zalive) {
        std::vector<int> cand;
        for (std::size_t zi = 0; zi < zs.size(); ++zi)
            if (zalive[zi]) {
                int z = zs[zi];
                if (std::find(A.begin(), A.end(), z) != A.end()) continue;
                if (std::find(B.begin(), B.end(), z) != B.end()) continue;
                if (dedupe_bc && z < B.front()) continue;
                cand.push_back(z);
            }
        if (static_cast<int>(cand.size()) < c) return;
        std::vector<int> C;
        chooseC(cand, 0, C);
    }

    void chooseC(const std::vector<int>& cand, std::size_t from, std::vector<int>& C) {
        if (stopped) return;
        if (static_cast<int>(C.size()) == c) {
            if (!fn(KCopy::canonical(A, B, C))) stopped = true;
            return;
        }
        for (std::size_t i = from; i < cand.size(); ++i) {
            if (cand.size() - i < static_cast<std::size_t>(c) - C.size()) break;
            C.push_back(cand[i]);
            chooseC(cand, i + 1, C);
            C.pop_back();
            if (stopped) return;
        }
    }
};

}  // namespace

void for_each_copy(const Hypergraph3& h, const KSpec& spec,
                   const std::function<bool(const KCopy&)>& fn) {
    std::vector<int> all(h.n());
    for (int i = 0; i < h.n(); ++i) all[i] = i;
    CopySearch search{h, spec.a, spec.b, spec.c, spec.a == spec.b, spec.b == spec.c, fn};
    search.run(all, all, all);
}

std::vector<KCopy> enumerate_copies(const Hypergraph3& h, const KSpec& spec) {
    const long long limit = guard_limit(guards::kCopyEnumeration);
    std::vector<KCopy> out;
    for_each_copy(h, spec, [&](const KCopy& c) {
        out.push_back(c);
        if (static_cast<long long>(out.size()) > limit) return false;
        return true;
    });
    if (static_cast<long long>(out.size()) > limit)
        throw SizeLimitError("enumerate_copies: copy guard exceeded");
    return out;
}

void for_each_copy_through(const Hypergraph3& h, const KSpec& spec, int v,
                           const std::function<bool(const KCopy&)>& fn) {
    if (v < 0 || v >= h.n()) throw std::invalid_argument("vertex out of range");
    for_each_copy(h, spec, [&](const KCopy& c) {
        for (const auto& p : c.parts)
            if (std::binary_search(p.begin(), p.end(), v)) return fn(c);
        return true;
    });
}

long long count_copies_through(const Hypergraph3& h, const KSpec& spec, int v) {
    long long count = 0;
    for_each_copy_through(h, spec, v, [&](const KCopy&) {
        ++count;
        return true;
    });
    return count;
}

namespace {

std::uint64_t copy_mask(const KCopy& c) {
    std::uint64_t m = 0;
    for (const auto& p : c.parts)
        for (int v : p) m |= 1ULL << v;
    return m;
}

// Branch-and-bound maximum set packing over copy masks (host n <= 64).
struct PackingSolver {
    int n, k;
    const std::vector<std::uint64_t>& masks;
    std::vector<std::vector<std::uint32_t>> through;        // per vertex: copy indices
    std::vector<std::vector<std::uint64_t>> through_masks;  // same copies, contiguous masks
    long long budget;
    bool budget_ok = true;
    int best = 0;

    PackingSolver(int n_, int k_, const std::vector<std::uint64_t>& masks_)
        : n(n_), k(k_), masks(masks_), budget(guard_limit(guards::kSolverNodes)) {
        through.assign(n, {});
        through_masks.assign(n, {});
        for (std::uint32_t i = 0; i < masks.size(); ++i) {
            std::uint64_t m = masks[i];
            while (m) {
                int v = std::countr_zero(m);
                through[v].push_back(i);
                through_masks[v].push_back(masks[i]);
                m &= m - 1;
            }
        }
    }

    int greedy() const {
        std::uint64_t used = 0;
        int count = 0;
        for (auto m : masks)
            if ((m & used) == 0) {
                used |= m;
                ++count;
            }
        return count;
    }

    int avail_count(int v, std::uint64_t used) const {
        const auto& list = through_masks[v];
        return static_cast<int>(kernels::count_disjoint(list.data(), list.size(), 1, &used));
    }

    // Max additional copies from state (used, dead). target < 0 computes the
    // optimum into best; target >= 0 turns it into a reachability decision.
    bool solve(std::uint64_t used, std::uint64_t dead, int count, int target) {
        if (--budget < 0) {
            budget_ok = false;
            return false;
        }
        // pick the coverable vertex with fewest available copies; vertices
        // with none are dead for the whole subtree
        int pick = -1, pick_avail = INT32_MAX;
        std::uint64_t blocked = used | dead;
        int coverable = 0;
        for (int v = 0; v < n; ++v) {
            if (blocked & (1ULL << v)) continue;
            int av = avail_count(v, used);
            if (av == 0) {
                dead |= 1ULL << v;
                continue;
            }
            ++coverable;
            if (av < pick_avail) {
                pick_avail = av;
                pick = v;
            }
        }
        if (target < 0 && count > best) best = count;
        if (target >= 0 && count >= target) return true;
        int ub = count + coverable / k;
        if (target < 0 && ub <= best) return false;
        if (target >= 0 && ub < target) return false;
        if (pick < 0) return target >= 0 ? count >= target : false;

        for (auto idx : through[pick]) {
            if (masks[idx] & used) continue;
            if (solve(used | masks[idx], dead, count + 1, target)) return true;
            if (!budget_ok) return false;
        }
        // leave pick uncovered
        return solve(used, dead | (1ULL << pick), count, target);
    }
};

std::vector<std::uint64_t> copy_masks(const Hypergraph3& h, const std::vector<KCopy>& copies) {
    if (h.n() > 64) throw SizeLimitError("solver guard: host larger than 64 vertices");
    std::vector<std::uint64_t> masks;
    masks.reserve(copies.size());
    for (const auto& c : copies) masks.push_back(copy_mask(c));
    return masks;
}

}  // namespace

MaxTilingResult max_tiling(const Hypergraph3& h, const KSpec& spec) {
    auto copies = enumerate_copies(h, spec);
    std::sort(copies.begin(), copies.end());
    auto masks = copy_masks(h, copies);

    MaxTilingResult result;
    if (copies.empty()) return result;

    PackingSolver solver(h.n(), spec.k, masks);
    solver.best = solver.greedy();
    solver.solve(0, 0, 0, -1);
    const int opt = solver.best;
    if (!solver.budget_ok) {
        // Lower bound only: report the greedy packing.
        std::uint64_t used = 0;
        for (std::size_t i = 0; i < masks.size(); ++i)
            if ((masks[i] & used) == 0) {
                used |= masks[i];
                result.tiling.copies.push_back(copies[i]);
            }
        result.optimal = false;
        return result;
    }

    // Lexicographically least optimal witness over the canonical copy order.
    std::uint64_t used = 0;
    int taken = 0;
    for (std::size_t i = 0; i < masks.size() && taken < opt; ++i) {
        if (masks[i] & used) continue;
        PackingSolver probe(h.n(), spec.k, masks);
        probe.best = 0;
        if (probe.solve(used | masks[i], 0, 0, opt - taken - 1) && probe.budget_ok) {
            used |= masks[i];
            result.tiling.copies.push_back(copies[i]);
            ++taken;
        }
    }
    result.optimal = taken == opt;
    return result;
}

std::optional<Tiling> has_perfect_tiling(const Hypergraph3& h, const KSpec& spec) {
    if (h.n() % spec.k != 0) return std::nullopt;
    if (h.n() == 0) return Tiling{};
    auto copies = enumerate_copies(h, spec);
    if (copies.empty()) return std::nullopt;
    std::sort(copies.begin(), copies.end());
    auto masks = copy_masks(h, copies);

    // exact-cover search: every vertex must be covered
    struct Cover {
        int n;
        const std::vector<std::uint64_t>& masks;
        std::vector<std::vector<std::uint32_t>> through;
        std::vector<std::vector<std::uint64_t>> through_masks;
        long long budget;
        std::vector<std::uint32_t> chosen;

        bool dfs(std::uint64_t used) {
            if (--budget < 0) throw SizeLimitError("has_perfect_tiling: node budget exhausted");
            if (used == (n == 64 ? ~0ULL : (1ULL << n) - 1)) return true;
            int pick = -1, pick_avail = INT32_MAX;
            for (int v = 0; v < n; ++v) {
                if (used & (1ULL << v)) continue;
                const auto& list = through_masks[v];
                int av = static_cast<int>(kernels::count_disjoint(list.data(), list.size(), 1, &used));
                if (av == 0) return false;
                if (av < pick_avail) {
                    pick_avail = av;
                    pick = v;
                }
            }
            for (auto idx : through[pick]) {
                if (masks[idx] & used) continue;
                chosen.push_back(idx);
                if (dfs(used | masks[idx])) return true;
                chosen.pop_back();
            }
            return false;
        }
    };

    Cover cover{h.n(), masks, {}, {}, guard_limit(guards::kSolverNodes), {}};
    cover.through.assign(h.n(), {});
    cover.through_masks.assign(h.n(), {});
    for (std::uint32_t i = 0; i < masks.size(); ++i) {
        std::uint64_t m = masks[i];
        while (m) {
            int v = std::countr_zero(m);
            cover.through[v].push_back(i);
            cover.through_masks[v].push_back(masks[i]);
            m &= m - 1;
        }
    }
    if (!cover.dfs(0)) return std::nullopt;
    Tiling t;
    for (auto idx : cover.chosen) t.copies.push_back(copies[idx]);
    return t;
}

namespace {

// First (lexicographic) copy with classes of sizes (na, nb, nc) drawn from
// the pools (X, Y, Z); empty optional when none exists.
std::optional<KCopy> first_copy_in_triple(const Hypergraph3& h, std::span<const int> xs,
                                          std::span<const int> ys, std::span<const int> zs, int na,
                                          int nb, int nc) {
    std::optional<KCopy> found;
    std::function<bool(const KCopy&)> take = [&](const KCopy& c) {
        found = c;
        return false;
    };
    CopySearch search{h, na, nb, nc, false, false, take};
    search.run(xs, ys, zs);
    return found;
}

void remove_vertices(std::vector<int>& pool, const std::vector<int>& gone) {
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [&](int v) {
                                  return std::binary_search(gone.begin(), gone.end(), v);
                              }),
               pool.end());
}

}  // namespace

GreedyResult greedy_regular_tiling(const Hypergraph3& h, std::span<const int> v1,
                                   std::span<const int> v2, std::span<const int> v3,
                                   const KSpec& spec, const Rational& eps) {
    const long long s1 = static_cast<long long>(v1.size());
    const long long s2 = static_cast<long long>(v2.size());
    const long long s3 = static_cast<long long>(v3.size());
    if (!(s1 <= s2 && s2 <= s3))
        throw std::invalid_argument("greedy_regular_tiling: need |V1| <= |V2| <= |V3|");
    // |V1|/a >= |V2|/b >= |V3|/c, exact
    if (s1 * spec.b < s2 * spec.a || s2 * spec.c < s3 * spec.b)
        throw std::invalid_argument("greedy_regular_tiling: ratio precondition violated");
    if (eps <= Rational(0)) throw std::invalid_argument("greedy_regular_tiling: eps must be positive");

    const long long m = s3;
    auto below_threshold = [&](long long size) { return Rational(size) < eps * Rational(m); };

    std::array<std::vector<int>, 3> U{std::vector<int>(v1.begin(), v1.end()),
                                      std::vector<int>(v2.begin(), v2.end()),
                                      std::vector<int>(v3.begin(), v3.end())};
    for (auto& u : U) std::sort(u.begin(), u.end());

    GreedyResult result;
    auto ratio_chain_holds = [&](const std::array<int, 3>& order) {
        long long u1 = U[order[0]].size(), u2 = U[order[1]].size(), u3 = U[order[2]].size();
        return u1 * spec.b >= u2 * spec.a && u2 * spec.c >= u3 * spec.b;
    };

    bool chain_before = true;
    for (;;) {
        std::array<int, 3> order{0, 1, 2};
        std::sort(order.begin(), order.end(),
                  [&](int x, int y) { return U[x].size() != U[y].size() ? U[x].size() < U[y].size()
                                                                        : x < y; });
        auto& U1 = U[order[0]];
        auto& U2 = U[order[1]];
        auto& U3 = U[order[2]];
        if (below_threshold(static_cast<long long>(U1.size()))) break;

        if (static_cast<long long>(U3.size()) - static_cast<long long>(U1.size()) <=
            spec.c - spec.a) {
            // K_{k,k,k} step: three role-rotated copies from the same snapshot;
            // any failure rolls the whole batch back.
            std::array<std::vector<int>, 3> snapshot = {U1, U2, U3};
            std::array<std::vector<int>, 3> pools = snapshot;
            std::vector<KCopy> batch;
            bool ok = true;
            for (int t = 0; t < 3 && ok; ++t) {
                auto copy = first_copy_in_triple(h, pools[t % 3], pools[(t + 1) % 3],
                                                 pools[(t + 2) % 3], spec.a, spec.b, spec.c);
                if (!copy) {
                    ok = false;
                    break;
                }
                batch.push_back(*copy);
                auto gone = copy->vertices();
                for (auto& pool : pools) remove_vertices(pool, gone);
            }
            if (!ok) {
                result.stalled = true;
                break;
            }
            for (auto& copy : batch) {
                auto gone = copy.vertices();
                for (auto& u : U) remove_vertices(u, gone);
                result.tiling.copies.push_back(std::move(copy));
            }
        } else {
            auto copy = first_copy_in_triple(h, U1, U2, U3, spec.a, spec.b, spec.c);
            if (!copy) {
                result.stalled = true;
                break;
            }
            auto gone = copy->vertices();
            for (auto& u : U) remove_vertices(u, gone);
            result.tiling.copies.push_back(std::move(*copy));

            std::array<int, 3> order_after{0, 1, 2};
            std::sort(order_after.begin(), order_after.end(), [&](int x, int y) {
                return U[x].size() != U[y].size() ? U[x].size() < U[y].size() : x < y;
            });
            if (chain_before && !ratio_chain_holds(order_after)) result.invariant_held = false;
            chain_before = chain_before && ratio_chain_holds(order_after);
        }
    }

    std::array<long long, 3> sizes{static_cast<long long>(U[0].size()),
                                   static_cast<long long>(U[1].size()),
                                   static_cast<long long>(U[2].size())};
    std::sort(sizes.begin(), sizes.end());
    result.leftover = sizes;
    return result;
}

Hypergraph3 augment_universal(const Hypergraph3& h, const Rational& rho) {
    if (rho < Rational(0)) throw std::invalid_argument("augment_universal: rho must be >= 0");
    const int n = h.n();
    const long long t = (Rational(2) * rho * Rational(n)).ceil();
    if (t == 0) return h;
    const long long total = binom(n + t, 3) - binom(n, 3) + h.edge_count();
    if (total > guard_limit(guards::kCopyEnumeration))
        throw SizeLimitError("augment_universal: edge guard exceeded");

    std::vector<Edge> edges(h.edges());
    const int nn = n + static_cast<int>(t);
    // triples meeting the new set = triples whose largest vertex is new
    for (int z = n; z < nn; ++z)
        for (int x = 0; x < z; ++x)
            for (int y = x + 1; y < z; ++y) edges.push_back({x, y, z});
    return Hypergraph3(nn, std::move(edges));
}

}  // namespace hypertile
