#include "hypertile/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hypertile/errors.hpp"
#include "hypertile/guards.hpp"
#include "hypertile/rng.hpp"

namespace hypertile {

namespace {

bool div2_applicable(const KSpec& s) { return s.type0 || (s.g == 1 && s.d >= 2 && s.d % 2 == 0); }
bool div3_applicable(const KSpec& s) { return s.g == 1 && s.d >= 3 && s.d % 2 == 1; }

int tiling_m(int n) { return static_cast<int>(std::llround((std::sqrt(2.0) - 1.0) * n)); }

long long sq(long long x) { return x * x; }

}  // namespace

std::vector<int> barrier_part_sizes(BarrierKind kind, const KSpec& spec, int n) {
    if (n < spec.k) throw InfeasibleSize("barrier: n < k");
    switch (kind) {
        case BarrierKind::SpaceI: {
            int v1 = static_cast<int>((static_cast<long long>(spec.a) * n) / spec.k) - 1;
            if (v1 < 1 || n - v1 < 1) throw InfeasibleSize("space barrier I: no valid |V1|");
            return {v1, n - v1};
        }
        case BarrierKind::SpaceII: {
            int v1 = static_cast<int>((static_cast<long long>(spec.a + spec.b) * n) / spec.k) - 1;
            if (v1 < 1 || n - v1 < 1) throw InfeasibleSize("space barrier II: no valid |V1|");
            return {v1, n - v1};
        }
        case BarrierKind::DivI: {
            int v1 = n / 2 + 1;
            if (n - v1 < 1) throw InfeasibleSize("divisibility barrier I: no valid |V1|");
            return {v1, n - v1};
        }
        case BarrierKind::DivII: {
            if (!div2_applicable(spec))
                throw ConstructionNotApplicable("divisibility barrier II needs type 0 or even type d");
            // five candidates around n/2, smallest valid first
            for (int v2 = n / 2 - 2; v2 <= n / 2 + 2; ++v2) {
                if (v2 < 1 || v2 > n - 1 || v2 % 2 == 0) continue;
                if (spec.g > 1 && v2 % spec.g == 0) continue;
                return {n - v2, v2};
            }
            throw InfeasibleSize("divisibility barrier II: no valid |V2| in the window");
        }
        case BarrierKind::DivIII: {
            if (!div3_applicable(spec))
                throw ConstructionNotApplicable("divisibility barrier III needs odd type d >= 3");
            if (n % spec.k != 0)
                throw ConstructionNotApplicable("divisibility barrier III needs k | n");
            const int center = (n + 2) / 3;  // ceil(n/3)
            const long long na_over_k = static_cast<long long>(n) / spec.k * spec.a;
            for (int v1 = center - 1; v1 <= center + 1; ++v1) {
                if (v1 < 1 || v1 > n - 1) continue;
                if ((v1 - na_over_k) % spec.d != 0) return {v1, n - v1};
            }
            throw InfeasibleSize("divisibility barrier III: no valid |V1| in the window");
        }
        case BarrierKind::Tiling: {
            if (spec.a < 2)
                throw ConstructionNotApplicable("tiling barrier needs a >= 2");
            int m = tiling_m(n);
            int v3 = n - 1 - 2 * m;
            if (m < 1 || v3 < 1) throw InfeasibleSize("tiling barrier: parts collapse at this n");
            return {1, m, m, v3};
        }
        case BarrierKind::SpaceGeneral:
            throw std::invalid_argument("use generate_general for the r-uniform barrier");
    }
    throw std::invalid_argument("unknown barrier kind");
}

long long predicted_degree(BarrierKind kind, const KSpec& spec, int n) {
    auto sizes = barrier_part_sizes(kind, spec, n);
    switch (kind) {
        case BarrierKind::SpaceI: {
            // vertices of V2 are extremal: they see every pair except those inside V2\{v}
            long long v2 = sizes[1];
            return binom(n - 1, 2) - binom(v2 - 1, 2);
        }
        case BarrierKind::SpaceII: {
            long long v1 = sizes[0], v2 = sizes[1];
            return std::min(binom(v1, 2), binom(n - 1, 2) - binom(v2, 2));
        }
        case BarrierKind::DivI:
            return std::min(binom(sizes[0] - 1, 2), binom(sizes[1] - 1, 2));
        case BarrierKind::DivII: {
            long long v1 = sizes[0], v2 = sizes[1];
            return std::min(binom(v1 - 1, 2) + binom(v2, 2), v1 * (v2 - 1));
        }
        case BarrierKind::DivIII: {
            long long v1 = sizes[0], v2 = sizes[1];
            return std::min(binom(v2, 2), v1 * (v2 - 1));
        }
        case BarrierKind::Tiling: {
            long long m = sizes[1];
            long long inner = binom(n - m - 2, 2);
            return std::min({sq(m), inner + m, 2 * inner - binom(n - 2 * m - 2, 2)});
        }
        case BarrierKind::SpaceGeneral:
            throw std::invalid_argument("use generate_general for the r-uniform barrier");
    }
    throw std::invalid_argument("unknown barrier kind");
}

BarrierInstance generate(BarrierKind kind, const KSpec& spec, int n) {
    auto sizes = barrier_part_sizes(kind, spec, n);
    if (binom(n, 3) > guard_limit(guards::kCopyEnumeration))
        throw SizeLimitError("generate: triple enumeration guard exceeded");

    // consecutive vertex blocks per part
    std::vector<int> part_of(n);
    std::vector<std::vector<int>> blocks(sizes.size());
    {
        int v = 0;
        for (std::size_t p = 0; p < sizes.size(); ++p)
            for (int i = 0; i < sizes[p]; ++i, ++v) {
                part_of[v] = static_cast<int>(p);
                blocks[p].push_back(v);
            }
    }

    auto keeps = [&](int x, int y, int z) -> bool {
        switch (kind) {
            case BarrierKind::SpaceI:
                return part_of[x] == 0 || part_of[y] == 0 || part_of[z] == 0;
            case BarrierKind::SpaceII:
                return (part_of[x] == 0) + (part_of[y] == 0) + (part_of[z] == 0) >= 2;
            case BarrierKind::DivI:
                return part_of[x] == part_of[y] && part_of[y] == part_of[z];
            case BarrierKind::DivII: {
                int c = (part_of[x] == 1) + (part_of[y] == 1) + (part_of[z] == 1);
                return c == 0 || c == 2;
            }
            case BarrierKind::DivIII:
                return (part_of[x] == 0) + (part_of[y] == 0) + (part_of[z] == 0) == 1;
            case BarrierKind::Tiling: {
                // parts: 0 = apex, 1 = V1, 2 = V2, 3 = V3
                int apex = (part_of[x] == 0) + (part_of[y] == 0) + (part_of[z] == 0);
                if (apex == 1) {
                    int p1 = (part_of[x] == 1) + (part_of[y] == 1) + (part_of[z] == 1);
                    int p2 = (part_of[x] == 2) + (part_of[y] == 2) + (part_of[z] == 2);
                    return p1 == 1 && p2 == 1;
                }
                if (apex > 1) return false;
                int p1 = (part_of[x] == 1) + (part_of[y] == 1) + (part_of[z] == 1);
                int p2 = (part_of[x] == 2) + (part_of[y] == 2) + (part_of[z] == 2);
                return p1 == 0 || p2 == 0;
            }
            case BarrierKind::SpaceGeneral: return false;
        }
        return false;
    };

    std::vector<Edge> edges;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                if (keeps(x, y, z)) edges.push_back({x, y, z});

    BarrierInstance inst;
    inst.kind = kind;
    inst.spec = spec;
    inst.n = n;
    inst.graph = Hypergraph3(n, std::move(edges));
    std::vector<std::vector<int>> parts{{}};
    for (auto& b : blocks) parts.push_back(b);
    inst.parts = VertexPartition(n, std::move(parts));
    inst.predicted_min_degree = predicted_degree(kind, spec, n);

    switch (kind) {
        case BarrierKind::SpaceI:
            inst.certificate = "every copy has a class inside V1, so coverage <= k*floor(|V1|/a) = " +
                               std::to_string(static_cast<long long>(spec.k) * (sizes[0] / spec.a)) +
                               " < n";
            break;
        case BarrierKind::SpaceII:
            inst.certificate =
                "every copy has two classes inside V1, so coverage <= k*floor(|V1|/(a+b)) = " +
                std::to_string(static_cast<long long>(spec.k) * (sizes[0] / (spec.a + spec.b))) +
                " < n";
            break;
        case BarrierKind::DivI:
            inst.certificate = "copies stay inside one side and k divides neither " +
                               std::to_string(sizes[0]) + " nor " + std::to_string(sizes[1]);
            break;
        case BarrierKind::DivII:
            inst.certificate =
                spec.g > 1
                    ? "every copy meets V2 in a multiple of gcd(a,b,c) and gcd(a,b,c) does not divide |V2|"
                    : "every copy meets V2 in an even count and |V2| is odd";
            break;
        case BarrierKind::DivIII:
            inst.certificate =
                "every copy meets V1 in a vertices mod d; d does not divide |V1| - na/k";
            break;
        case BarrierKind::Tiling:
            inst.certificate = "the apex vertex lies in no copy";
            break;
        case BarrierKind::SpaceGeneral:
            break;
    }
    return inst;
}

namespace {

// copies-per-class rule per kind; true = consistent with the certificate
bool copy_rule_holds(const BarrierInstance& inst, const KCopy& copy) {
    const auto& p = inst.parts;
    auto classes_inside = [&](int part) {
        int count = 0;
        for (const auto& cls : copy.parts) {
            bool inside = true;
            for (int v : cls)
                if (p.part_of(v) != part) {
                    inside = false;
                    break;
                }
            count += inside;
        }
        return count;
    };
    auto meet = [&](int part) {
        int count = 0;
        for (const auto& cls : copy.parts)
            for (int v : cls) count += p.part_of(v) == part;
        return count;
    };
    switch (inst.kind) {
        case BarrierKind::SpaceI: return classes_inside(1) >= 1;
        case BarrierKind::SpaceII: return classes_inside(1) >= 2;
        case BarrierKind::DivI: {
            int k = inst.spec.k;
            return meet(1) == k || meet(2) == k;
        }
        case BarrierKind::DivII: {
            int m = meet(2);
            const auto& s = inst.spec;
            return m == 0 || m == s.a + s.b || m == s.a + s.c || m == s.b + s.c;
        }
        case BarrierKind::DivIII: {
            const auto& s = inst.spec;
            return (meet(1) - s.a) % s.d == 0;
        }
        case BarrierKind::Tiling: return true;  // apex rule handled separately
        case BarrierKind::SpaceGeneral: return false;
    }
    return false;
}

bool arithmetic_obstruction(const BarrierInstance& inst, std::string& detail) {
    const auto& s = inst.spec;
    switch (inst.kind) {
        case BarrierKind::SpaceI: {
            long long v1 = static_cast<long long>(inst.parts.part(1).size());
            long long cover = static_cast<long long>(s.k) * (v1 / s.a);
            detail = "coverage bound " + std::to_string(cover) + " < " + std::to_string(inst.n);
            return cover < inst.n;
        }
        case BarrierKind::SpaceII: {
            long long v1 = static_cast<long long>(inst.parts.part(1).size());
            long long cover = static_cast<long long>(s.k) * (v1 / (s.a + s.b));
            detail = "coverage bound " + std::to_string(cover) + " < " + std::to_string(inst.n);
            return cover < inst.n;
        }
        case BarrierKind::DivI: {
            long long v1 = static_cast<long long>(inst.parts.part(1).size());
            long long v2 = static_cast<long long>(inst.parts.part(2).size());
            detail = "k | neither part";
            return v1 % s.k != 0 && v2 % s.k != 0;
        }
        case BarrierKind::DivII: {
            long long v2 = static_cast<long long>(inst.parts.part(2).size());
            if (s.g > 1) {
                detail = "gcd(a,b,c) = " + std::to_string(s.g) + " does not divide |V2| = " +
                         std::to_string(v2);
                return v2 % s.g != 0;
            }
            detail = "a+b, a+c, b+c all even; |V2| = " + std::to_string(v2) + " odd";
            return (s.a + s.b) % 2 == 0 && (s.a + s.c) % 2 == 0 && (s.b + s.c) % 2 == 0 &&
                   v2 % 2 == 1;
        }
        case BarrierKind::DivIII: {
            long long v1 = static_cast<long long>(inst.parts.part(1).size());
            long long na_over_k = static_cast<long long>(inst.n) / s.k * s.a;
            detail = "d = " + std::to_string(s.d) + " does not divide |V1| - na/k = " +
                     std::to_string(v1 - na_over_k);
            return (v1 - na_over_k) % s.d != 0;
        }
        case BarrierKind::Tiling:
            detail = "apex not coverable";
            return true;
        case BarrierKind::SpaceGeneral: return false;
    }
    return false;
}

// candidate count before symmetry: C(n,a)*C(n-a,b)*C(n-a-b,c)
long long candidate_copy_count(const KSpec& s, int n) {
    __int128 c = (__int128)binom(n, s.a);
    c *= binom(n - s.a, s.b);
    if (c > INT64_MAX) return INT64_MAX;
    c *= binom(n - s.a - s.b, s.c);
    if (c > INT64_MAX) return INT64_MAX;
    return static_cast<long long>(c);
}

}  // namespace

CertificateResult check_certificate(const BarrierInstance& inst, std::uint64_t sample_seed) {
    CertificateResult res;
    std::string arith;
    if (!arithmetic_obstruction(inst, arith)) {
        res.detail = "arithmetic obstruction fails: " + arith;
        return res;
    }

    const long long candidates = candidate_copy_count(inst.spec, inst.n);
    const long long limit = guard_limit(guards::kCopyEnumeration);
    bool violated = false;
    KCopy bad;

    if (inst.kind == BarrierKind::Tiling) {
        const int apex = inst.parts.part(1).front();
        if (candidates <= limit) {
            for_each_copy_through(inst.graph, inst.spec, apex, [&](const KCopy& c) {
                violated = true;
                bad = c;
                return false;
            });
        } else {
            res.sampled = true;
            Rng rng(sample_seed);
            const auto& s = inst.spec;
            for (long long t = 0; t < guards::kCertificateSamples && !violated; ++t) {
                auto verts = rng.sample_subset(inst.n - 1, s.k - 1);
                std::vector<int> cand{apex};
                for (int v : verts) cand.push_back(v >= apex ? v + 1 : v);
                for (int j = static_cast<int>(cand.size()) - 1; j > 0; --j)
                    std::swap(cand[j], cand[rng.below(j + 1)]);
                std::vector<int> A(cand.begin(), cand.begin() + s.a);
                std::vector<int> B(cand.begin() + s.a, cand.begin() + s.a + s.b);
                std::vector<int> C(cand.begin() + s.a + s.b, cand.end());
                KCopy copy = KCopy::canonical(A, B, C);
                if (copy_in_host(inst.graph, copy)) {
                    violated = true;
                    bad = copy;
                }
            }
        }
        if (violated) {
            res.detail = "apex contained in a copy";
            res.violating_copy = bad;
            return res;
        }
        res.ok = true;
        res.detail = arith;
        return res;
    }

    if (candidates <= limit) {
        for_each_copy(inst.graph, inst.spec, [&](const KCopy& c) {
            if (!copy_rule_holds(inst, c)) {
                violated = true;
                bad = c;
                return false;
            }
            return true;
        });
    } else {
        res.sampled = true;
        Rng rng(sample_seed);
        const auto& s = inst.spec;
        for (long long t = 0; t < guards::kCertificateSamples && !violated; ++t) {
            auto verts = rng.sample_subset(inst.n, s.k);
            for (int j = static_cast<int>(verts.size()) - 1; j > 0; --j)
                std::swap(verts[j], verts[rng.below(j + 1)]);
            std::vector<int> A(verts.begin(), verts.begin() + s.a);
            std::vector<int> B(verts.begin() + s.a, verts.begin() + s.a + s.b);
            std::vector<int> C(verts.begin() + s.a + s.b, verts.end());
            KCopy copy = KCopy::canonical(A, B, C);
            if (copy_in_host(inst.graph, copy) && !copy_rule_holds(inst, copy)) {
                violated = true;
                bad = copy;
            }
        }
    }
    if (violated) {
        res.detail = "copy-class rule violated";
        res.violating_copy = bad;
        return res;
    }
    res.ok = true;
    res.detail = arith;
    return res;
}

RUniformBarrier generate_general(int r, int i, std::vector<int> sizes, int n) {
    if (r < 3) throw std::invalid_argument("r-uniform barrier: r >= 3");
    if (i < 1 || i >= r) throw std::invalid_argument("r-uniform barrier: need 1 <= i < r");
    if (static_cast<int>(sizes.size()) != r)
        throw std::invalid_argument("r-uniform barrier: need r class sizes");
    if (!std::is_sorted(sizes.begin(), sizes.end()) || sizes.front() < 1)
        throw std::invalid_argument("r-uniform barrier: sizes must be positive ascending");
    const long long s = std::accumulate(sizes.begin(), sizes.end(), 0LL);
    if (n < s) throw InfeasibleSize("r-uniform barrier: n < sum of sizes");
    long long prefix = 0;
    for (int j = 0; j < i; ++j) prefix += sizes[j];
    const int part_a = static_cast<int>(prefix * n / s) - 1;
    if (part_a < 1 || part_a >= n) throw InfeasibleSize("r-uniform barrier: |A_i| collapses");

    if (binom(n, r) > guard_limit(guards::kSubsetEnumeration))
        throw SizeLimitError("r-uniform barrier: edge enumeration guard exceeded");

    RUniformBarrier inst;
    inst.r = r;
    inst.i = i;
    inst.sizes = std::move(sizes);
    inst.n = n;
    inst.part_a = part_a;

    std::vector<int> pick(r);
    // iterative r-subset enumeration
    for (int j = 0; j < r; ++j) pick[j] = j;
    for (;;) {
        int in_a = 0;
        for (int v : pick) in_a += v < part_a;
        if (in_a >= i) inst.edges.push_back(pick);
        int j = r - 1;
        while (j >= 0 && pick[j] == n - r + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int l = j + 1; l < r; ++l) pick[l] = pick[l - 1] + 1;
    }
    return inst;
}

long long r_uniform_degree(const RUniformBarrier& inst, const std::vector<int>& dset) {
    long long count = 0;
    for (const auto& e : inst.edges) {
        bool all = true;
        for (int v : dset)
            if (!std::binary_search(e.begin(), e.end(), v)) {
                all = false;
                break;
            }
        count += all;
    }
    return count;
}

}  // namespace hypertile
