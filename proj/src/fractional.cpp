#include "hypertile/fractional.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "hypertile/errors.hpp"

namespace hypertile {

void FractionalHomTiling::set(int v, int edge_index, const Rational& w) {
    if (v < 0 || v >= host_.n()) throw std::invalid_argument("weight vertex out of range");
    if (edge_index < 0 || edge_index >= host_.edge_count())
        throw std::invalid_argument("weight edge index out of range");
    if (w < Rational(0) || w > Rational(1))
        throw std::invalid_argument("weights live in [0,1]");
    if (w.is_zero())
        weights_.erase({v, edge_index});
    else
        weights_[{v, edge_index}] = w;
}

Rational FractionalHomTiling::weight(int v, int edge_index) const {
    auto it = weights_.find({v, edge_index});
    return it == weights_.end() ? Rational(0) : it->second;
}

Rational FractionalHomTiling::vertex_total(int v) const {
    Rational total(0);
    auto it = weights_.lower_bound({v, 0});
    for (; it != weights_.end() && it->first.first == v; ++it) total += it->second;
    return total;
}

Rational FractionalHomTiling::total_weight() const {
    Rational total(0);
    for (const auto& [key, w] : weights_) total += w;
    return total;
}

std::optional<Rational> FractionalHomTiling::min_positive() const {
    std::optional<Rational> best;
    for (const auto& [key, w] : weights_)
        if (!w.is_zero() && (!best || w < *best)) best = w;
    return best;
}

namespace {

bool edge_labeling_ok(const std::array<Rational, 3>& w, const KSpec& spec) {
    // some ordering uvw with w_u <= w_v <= w_w and w_u/a >= w_v/b >= w_w/c
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms) {
        const Rational& u = w[p[0]];
        const Rational& v = w[p[1]];
        const Rational& x = w[p[2]];
        if (!(u <= v && v <= x)) continue;
        if (u * Rational(spec.b) >= v * Rational(spec.a) &&
            v * Rational(spec.c) >= x * Rational(spec.b))
            return true;
    }
    return false;
}

int edge_index_of(const Hypergraph3& h, std::array<int, 3> verts) {
    std::sort(verts.begin(), verts.end());
    const auto& es = h.edges();
    auto it = std::lower_bound(es.begin(), es.end(), verts);
    if (it == es.end() || *it != verts) throw std::invalid_argument("no such edge in host");
    return static_cast<int>(it - es.begin());
}

}  // namespace

VerifyResult verify(const FractionalHomTiling& ft, const KSpec& spec) {
    VerifyResult res;
    const auto& h = ft.host();
    // (1) incidence
    for (const auto& [key, w] : ft.entries()) {
        auto [v, ei] = key;
        const Edge& e = h.edges()[ei];
        if (v != e[0] && v != e[1] && v != e[2]) {
            res.violation = "condition (1): weight on non-incident pair (v=" + std::to_string(v) +
                            ", edge " + std::to_string(ei) + ")";
            return res;
        }
    }
    // (2) capacities
    for (int v = 0; v < h.n(); ++v) {
        if (ft.vertex_total(v) > Rational(1)) {
            res.violation = "condition (2): vertex total exceeds 1 at v=" + std::to_string(v);
            return res;
        }
    }
    // (3) per-edge labeling
    for (int ei = 0; ei < h.edge_count(); ++ei) {
        const Edge& e = h.edges()[ei];
        std::array<Rational, 3> w{ft.weight(e[0], ei), ft.weight(e[1], ei), ft.weight(e[2], ei)};
        if (!edge_labeling_ok(w, spec)) {
            res.violation = "condition (3): no admissible labeling on edge " + std::to_string(ei);
            return res;
        }
    }
    res.valid = true;
    res.weight = ft.total_weight();
    res.hmin = ft.min_positive();
    return res;
}

namespace {

// Class layout of one K copy starting at base: X = [base, base+a), etc.
struct CopyLayout {
    int base, a, b, c;
    int x(int i) const { return base + i; }
    int y(int i) const { return base + a + i; }
    int z(int i) const { return base + a + b + i; }
};

void add_copy_edges(std::vector<Edge>& edges, const CopyLayout& L) {
    for (int i = 0; i < L.a; ++i)
        for (int j = 0; j < L.b; ++j)
            for (int l = 0; l < L.c; ++l) edges.push_back({L.x(i), L.y(j), L.z(l)});
}

void set_standard(FractionalHomTiling& ft, const CopyLayout& L, const KSpec& s) {
    Rational wx(1, static_cast<long long>(s.b) * s.c);
    Rational wy(1, static_cast<long long>(s.a) * s.c);
    Rational wz(1, static_cast<long long>(s.a) * s.b);
    for (int i = 0; i < L.a; ++i)
        for (int j = 0; j < L.b; ++j)
            for (int l = 0; l < L.c; ++l) {
                int ei = edge_index_of(ft.host(), {L.x(i), L.y(j), L.z(l)});
                ft.set(L.x(i), ei, wx);
                ft.set(L.y(j), ei, wy);
                ft.set(L.z(l), ei, wz);
            }
}

void set_edge(FractionalHomTiling& ft, std::array<int, 3> verts, std::array<Rational, 3> w) {
    int ei = edge_index_of(ft.host(), verts);
    for (int i = 0; i < 3; ++i) ft.set(verts[i], ei, w[i]);
}

}  // namespace

FractionalHomTiling standard_weighting(const KSpec& spec) {
    CopyLayout L{0, spec.a, spec.b, spec.c};
    std::vector<Edge> edges;
    add_copy_edges(edges, L);
    FractionalHomTiling ft(Hypergraph3(spec.k, std::move(edges)));
    set_standard(ft, L, spec);
    return ft;
}

const char* l1_case_name(L1Case c) {
    switch (c) {
        case L1Case::ZNeighbor: return "z";
        case L1Case::YNeighborALtB: return "y-a<b";
        case L1Case::YNeighborAEqB: return "y-a=b";
    }
    return "?";
}

const char* l2_case_name(L2Case c) {
    switch (c) {
        case L2Case::C1_zz: return "1-zz";
        case L2Case::C11_zy: return "1.1-zy";
        case L2Case::C11_yy_zx: return "1.1-yy+zx";
        case L2Case::C12_two_zx_zy: return "1.2-two-zx-zy";
        case L2Case::C12_cross: return "1.2-cross";
        case L2Case::C2_1: return "2.1";
        case L2Case::C2_2: return "2.2";
        case L2Case::C2_3: return "2.3";
        case L2Case::C2_3_coincident: return "2.3-coincident";
    }
    return "?";
}

std::optional<L1Case> parse_l1_case(const std::string& s) {
    for (L1Case c : {L1Case::ZNeighbor, L1Case::YNeighborALtB, L1Case::YNeighborAEqB})
        if (s == l1_case_name(c)) return c;
    return std::nullopt;
}

std::optional<L2Case> parse_l2_case(const std::string& s) {
    for (L2Case c : {L2Case::C1_zz, L2Case::C11_zy, L2Case::C11_yy_zx, L2Case::C12_two_zx_zy,
                     L2Case::C12_cross, L2Case::C2_1, L2Case::C2_2, L2Case::C2_3,
                     L2Case::C2_3_coincident})
        if (s == l2_case_name(c)) return c;
    return std::nullopt;
}

GadgetResult gadget_L1(const KSpec& s, L1Case c) {
    if (s.a == s.c) throw ConstructionNotApplicable("one-copy gadget needs a < c");
    if (c == L1Case::YNeighborALtB && s.a >= s.b)
        throw std::invalid_argument("case y-a<b needs a < b");
    if (c == L1Case::YNeighborAEqB && s.a != s.b)
        throw std::invalid_argument("case y-a=b needs a = b");

    const int k = s.k;
    const int u = k, up = k + 1;
    CopyLayout L{0, s.a, s.b, s.c};
    std::vector<Edge> edges;
    add_copy_edges(edges, L);

    // a+1 link triples u u' v, placed per case premise
    std::vector<int> link_targets;
    switch (c) {
        case L1Case::ZNeighbor:
            for (int i = 0; i <= s.a; ++i) link_targets.push_back(L.z(i));
            break;
        case L1Case::YNeighborALtB:
            for (int i = 0; i <= s.a; ++i) link_targets.push_back(L.y(i));
            break;
        case L1Case::YNeighborAEqB:
            // one X, one Y, then alternate
            for (int i = 0; static_cast<int>(link_targets.size()) < s.a + 1; ++i) {
                if (i % 2 == 0 && i / 2 < s.a) link_targets.push_back(L.x(i / 2));
                else if (i / 2 < s.b) link_targets.push_back(L.y(i / 2));
            }
            break;
    }
    for (int v : link_targets) edges.push_back({v, u, up});

    FractionalHomTiling ft(Hypergraph3(k + 2, std::move(edges)));
    set_standard(ft, L, s);

    const Rational wx(1, static_cast<long long>(s.b) * s.c);
    const Rational wy(1, static_cast<long long>(s.a) * s.c);
    const Rational wz(1, static_cast<long long>(s.a) * s.b);

    switch (c) {
        case L1Case::ZNeighbor: {
            int x = L.x(0), y = L.y(0), z = L.z(0);
            Rational unit(s.c - s.a, static_cast<long long>(s.a) * s.b * s.c * s.c);
            set_edge(ft, {x, y, z},
                     {unit * Rational(s.a), unit * Rational(s.b), unit * Rational(s.c)});
            set_edge(ft, {z, u, up}, {wx, wy, wz});
            break;
        }
        case L1Case::YNeighborALtB: {
            int x = L.x(0), y = L.y(0), z = L.z(0);
            Rational unit(s.b - s.a, static_cast<long long>(s.a) * s.b * s.b * s.c);
            set_edge(ft, {x, y, z},
                     {unit * Rational(s.a), unit * Rational(s.b), unit * Rational(s.c)});
            set_edge(ft, {y, u, up}, {wx, wy, wz});
            break;
        }
        case L1Case::YNeighborAEqB: {
            int x = L.x(0), y = L.y(0), z = L.z(0);
            Rational half_ac(1, 2LL * s.a * s.c);
            Rational half_aa(1, 2LL * s.a * s.a);
            set_edge(ft, {x, u, up}, {half_ac, half_ac, half_aa});
            set_edge(ft, {y, u, up}, {half_ac, half_ac, half_aa});
            set_edge(ft, {x, y, z}, {half_ac, half_ac, half_aa});
            break;
        }
    }

    GadgetResult res;
    res.tiling = std::move(ft);
    res.graph = res.tiling.host();
    res.weight = res.tiling.total_weight();
    res.hmin = res.tiling.min_positive().value();
    res.case_label = l1_case_name(c);
    res.link_edges = static_cast<long long>(link_targets.size());
    return res;
}

GadgetResult gadget_L2(const KSpec& s, L2Case c) {
    if (s.a == s.c) throw ConstructionNotApplicable("two-copy gadget needs a < c");
    const bool b_lt_c = s.b < s.c;
    const bool a_lt_b = s.a < s.b;
    switch (c) {
        case L2Case::C1_zz:
            if (!b_lt_c) throw std::invalid_argument("case 1-zz needs b < c");
            break;
        case L2Case::C11_zy:
        case L2Case::C11_yy_zx:
            if (!(a_lt_b && b_lt_c)) throw std::invalid_argument("case 1.1 needs a < b < c");
            break;
        case L2Case::C12_two_zx_zy:
        case L2Case::C12_cross:
            if (!(s.a == s.b && b_lt_c)) throw std::invalid_argument("case 1.2 needs a = b < c");
            break;
        case L2Case::C2_1:
        case L2Case::C2_2:
        case L2Case::C2_3:
        case L2Case::C2_3_coincident:
            if (!(a_lt_b && s.b == s.c)) throw std::invalid_argument("case 2 needs a < b = c");
            break;
    }

    const int k = s.k;
    const int u = 2 * k;
    CopyLayout K1{0, s.a, s.b, s.c};
    CopyLayout K2{k, s.a, s.b, s.c};

    // forbidden (class-pair) blocks of the link graph, per the case premise
    enum Cls { X = 0, Y = 1, Z = 2 };
    auto cls_of = [&](const CopyLayout& L, int v) {
        if (v < L.base + L.a) return X;
        if (v < L.base + L.a + L.b) return Y;
        return Z;
    };
    std::vector<std::pair<int, int>> forbidden;  // (class in K1, class in K2)
    switch (c) {
        case L2Case::C11_zy: forbidden = {{Z, Z}}; break;
        case L2Case::C11_yy_zx: forbidden = {{Z, Z}, {Z, Y}, {Y, Z}}; break;
        case L2Case::C12_two_zx_zy: forbidden = {{Z, Z}}; break;
        case L2Case::C12_cross: forbidden = {{Z, Z}, {Z, Y}, {Y, Z}}; break;
        default: break;
    }
    auto allowed = [&](int v, int w) {
        for (auto [c1, c2] : forbidden)
            if (cls_of(K1, v) == c1 && cls_of(K2, w) == c2) return false;
        return true;
    };

    // required link pairs per case
    std::vector<std::pair<int, int>> required;
    switch (c) {
        case L2Case::C1_zz: required = {{K1.z(0), K2.z(0)}}; break;
        case L2Case::C11_zy: required = {{K1.z(0), K2.y(0)}}; break;
        case L2Case::C11_yy_zx: required = {{K1.y(0), K2.y(0)}, {K1.z(0), K2.x(0)}}; break;
        case L2Case::C12_two_zx_zy:
            required = {{K1.z(0), K2.x(0)}, {K1.z(1), K2.y(0)}};
            break;
        case L2Case::C12_cross:
            required = {{K1.z(0), K2.x(0)}, {K1.x(0), K2.z(0)}, {K1.y(0), K2.y(0)}};
            break;
        case L2Case::C2_1: required = {{K1.z(0), K2.z(0)}, {K1.y(0), K2.x(0)}}; break;
        case L2Case::C2_2: required = {{K1.z(0), K2.z(0)}, {K1.y(0), K2.y(0)}}; break;
        case L2Case::C2_3: required = {{K1.z(0), K2.z(0)}, {K1.y(0), K2.z(1)}}; break;
        case L2Case::C2_3_coincident: required = {{K1.z(0), K2.z(0)}, {K1.y(0), K2.z(0)}}; break;
    }

    const long long need =
        std::max<long long>(static_cast<long long>(s.a) * s.a + 2LL * s.a * (s.b + s.c),
                            static_cast<long long>(s.a + s.b) * (s.a + s.b)) +
        1;

    std::vector<std::pair<int, int>> link = required;
    auto have = [&](int v, int w) {
        return std::find(link.begin(), link.end(), std::make_pair(v, w)) != link.end();
    };
    for (int v = 0; v < k && static_cast<long long>(link.size()) < need; ++v)
        for (int w = k; w < 2 * k && static_cast<long long>(link.size()) < need; ++w)
            if (allowed(v, w) && !have(v, w)) link.emplace_back(v, w);
    if (static_cast<long long>(link.size()) < need)
        throw std::logic_error("two-copy gadget: allowed link pairs below family threshold");

    std::vector<Edge> edges;
    add_copy_edges(edges, K1);
    add_copy_edges(edges, K2);
    for (auto [v, w] : link) edges.push_back({v, w, u});

    FractionalHomTiling ft(Hypergraph3(2 * k + 1, std::move(edges)));
    set_standard(ft, K1, s);
    set_standard(ft, K2, s);

    const Rational lam(1, static_cast<long long>(s.a) * s.b * s.c);
    const Rational a_over_c = Rational(s.a, s.c) * lam;
    const Rational b_over_c = Rational(s.b, s.c) * lam;
    const Rational wx(1, static_cast<long long>(s.b) * s.c);
    const Rational wy(1, static_cast<long long>(s.a) * s.c);
    const Rational wz(1, static_cast<long long>(s.a) * s.b);

    switch (c) {
        case L2Case::C1_zz: {
            int z1 = K1.z(0), z2 = K2.z(0);
            set_edge(ft, {u, z1, z2}, {lam, lam, lam});
            set_edge(ft, {K1.x(0), K1.y(0), z1}, {wx, wy, wz - lam});
            set_edge(ft, {K2.x(0), K2.y(0), z2}, {wx, wy, wz - lam});
            break;
        }
        case L2Case::C11_zy: {
            int z1 = K1.z(0), y2 = K2.y(0);
            set_edge(ft, {y2, z1, u}, {a_over_c, b_over_c, lam});
            set_edge(ft, {K1.x(0), K1.y(0), z1}, {wx, wy, wz - b_over_c});
            set_edge(ft, {K2.x(0), y2, K2.z(0)},
                     {wx, wy - a_over_c, wz - Rational(s.a, s.b) * lam});
            break;
        }
        case L2Case::C11_yy_zx: {
            int y1 = K1.y(0), y2 = K2.y(0), z1 = K1.z(0), x2 = K2.x(0);
            set_edge(ft, {y1, y2, u}, {b_over_c, b_over_c, lam});
            set_edge(ft, {x2, u, z1}, {a_over_c, b_over_c, lam});
            set_edge(ft, {K1.x(0), y1, z1}, {wx, wy - b_over_c, wz - lam});
            set_edge(ft, {x2, y2, K2.z(0)}, {wx - a_over_c, wy - b_over_c, wz - lam});
            break;
        }
        case L2Case::C12_two_zx_zy: {
            int z1 = K1.z(0), z1p = K1.z(1), x2 = K2.x(0), y2 = K2.y(0);
            set_edge(ft, {z1, x2, u}, {a_over_c, a_over_c, lam});
            set_edge(ft, {z1p, y2, u}, {a_over_c, a_over_c, lam});
            set_edge(ft, {K1.x(0), K1.y(0), z1}, {wx, wy, wz - a_over_c});
            set_edge(ft, {K1.x(0), K1.y(0), z1p}, {wx, wy, wz - a_over_c});
            set_edge(ft, {x2, y2, K2.z(0)}, {wx - a_over_c, wy - a_over_c, wz - lam});
            break;
        }
        case L2Case::C12_cross: {
            int z1 = K1.z(0), x1 = K1.x(0), y1 = K1.y(0);
            int z2 = K2.z(0), x2 = K2.x(0), y2 = K2.y(0);
            set_edge(ft, {u, x2, z1}, {a_over_c, a_over_c, lam});
            set_edge(ft, {u, x1, z2}, {a_over_c, a_over_c, lam});
            set_edge(ft, {y1, y2, u}, {a_over_c, a_over_c, lam});
            set_edge(ft, {x1, y1, z1}, {wx - a_over_c, wy - a_over_c, wz - lam});
            set_edge(ft, {x2, y2, z2}, {wx - a_over_c, wy - a_over_c, wz - lam});
            break;
        }
        case L2Case::C2_1: {
            int z1 = K1.z(0), z2 = K2.z(0), y1 = K1.y(0), x2 = K2.x(0);
            set_edge(ft, {u, z1, z2}, {lam, lam, lam});
            set_edge(ft, {x2, y1, u}, {a_over_c, lam, lam});
            set_edge(ft, {K1.x(0), y1, z1}, {wx, wy - lam, wz - lam});
            set_edge(ft, {x2, K2.y(0), z2}, {wx - a_over_c, wy - lam, wz - lam});
            break;
        }
        case L2Case::C2_2: {
            int z1 = K1.z(0), z2 = K2.z(0), y1 = K1.y(0), y2 = K2.y(0);
            set_edge(ft, {u, z1, z2}, {lam, lam, lam});
            set_edge(ft, {u, y1, y2}, {lam, lam, lam});
            set_edge(ft, {K1.x(0), y1, z1}, {wx, wy - lam, wz - lam});
            set_edge(ft, {K2.x(0), y2, z2}, {wx, wy - lam, wz - lam});
            break;
        }
        case L2Case::C2_3: {
            int z1 = K1.z(0), y1 = K1.y(0), z2 = K2.z(0), z2p = K2.z(1);
            set_edge(ft, {z2, u, z1}, {a_over_c, lam, lam});
            set_edge(ft, {z2p, u, y1}, {a_over_c, lam, lam});
            set_edge(ft, {K1.x(0), y1, z1}, {wx, wy - lam, wz - lam});
            set_edge(ft, {K2.x(0), K2.y(0), z2}, {wx, wy - a_over_c, wz - a_over_c});
            set_edge(ft, {K2.x(0), K2.y(1), z2p}, {wx, wy - a_over_c, wz - a_over_c});
            break;
        }
        case L2Case::C2_3_coincident: {
            int z1 = K1.z(0), y1 = K1.y(0), z2 = K2.z(0);
            set_edge(ft, {z2, u, z1}, {a_over_c, lam, lam});
            set_edge(ft, {z2, u, y1}, {a_over_c, lam, lam});
            set_edge(ft, {K1.x(0), y1, z1}, {wx, wy - lam, wz - lam});
            set_edge(ft, {K2.x(0), K2.y(0), z2}, {wx, wy - a_over_c, wz - a_over_c});
            set_edge(ft, {K2.x(0), K2.y(1), z2}, {wx, wy - a_over_c, wz - a_over_c});
            break;
        }
    }

    GadgetResult res;
    res.tiling = std::move(ft);
    res.graph = res.tiling.host();
    res.weight = res.tiling.total_weight();
    res.hmin = res.tiling.min_positive().value();
    res.case_label = l2_case_name(c);
    res.link_edges = static_cast<long long>(link.size());
    return res;
}

ConvertResult convert_fractional(const Hypergraph3& h, const VertexPartition& p,
                                 const Hypergraph3& r, const FractionalHomTiling& ft,
                                 const KSpec& spec, const Rational& eps) {
    if (ft.host().n() != r.n() || ft.host().edges() != r.edges())
        throw std::invalid_argument("convert_fractional: weighting host differs from R");
    if (p.n() != h.n()) throw std::invalid_argument("convert_fractional: partition host mismatch");
    const int t = p.r();
    if (r.n() != t) throw std::invalid_argument("convert_fractional: R order differs from cluster count");
    const std::size_t ell = p.part(1).size();
    for (int i = 2; i <= t; ++i)
        if (p.part(i).size() != ell)
            throw std::invalid_argument("convert_fractional: clusters must share one size");

    auto hmin = ft.min_positive();
    if (hmin && *hmin < Rational(1, static_cast<long long>(spec.b) * spec.c * spec.c))
        throw std::invalid_argument("convert_fractional: hmin below 1/(bc^2)");

    const Rational eps_prime = Rational(static_cast<long long>(spec.b) * spec.c * spec.c) * eps;

    ConvertResult out;
    std::vector<std::size_t> carved(t + 1, 0);  // per-cluster used prefix

    for (int ei = 0; ei < r.edge_count(); ++ei) {
        const Edge& e = r.edges()[ei];
        std::array<std::pair<Rational, int>, 3> wv{
            std::make_pair(ft.weight(e[0], ei), e[0]),
            std::make_pair(ft.weight(e[1], ei), e[1]),
            std::make_pair(ft.weight(e[2], ei), e[2])};
        if (wv[0].first.is_zero() || wv[1].first.is_zero() || wv[2].first.is_zero()) continue;
        std::sort(wv.begin(), wv.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });

        // floor sizes; trim to keep the ratio chain after rounding
        long long su = (wv[0].first * Rational(static_cast<long long>(ell))).floor();
        long long sv = (wv[1].first * Rational(static_cast<long long>(ell))).floor();
        long long sw = (wv[2].first * Rational(static_cast<long long>(ell))).floor();
        sv = std::min(sv, su * spec.b / spec.a);
        sw = std::min(sw, sv * spec.c / spec.b);
        if (su < spec.a || sv < spec.b || sw < spec.c) continue;

        std::array<std::vector<int>, 3> sets;
        std::array<long long, 3> sizes{su, sv, sw};
        for (int i = 0; i < 3; ++i) {
            int cluster = wv[i].second + 1;
            const auto& pool = p.part(cluster);
            if (carved[cluster] + sizes[i] > pool.size())
                throw std::invalid_argument("convert_fractional: cluster capacity exceeded");
            sets[i].assign(pool.begin() + carved[cluster],
                           pool.begin() + carved[cluster] + sizes[i]);
            carved[cluster] += sizes[i];
        }

        auto g = greedy_regular_tiling(h, sets[0], sets[1], sets[2], spec, eps_prime);
        out.any_stalled = out.any_stalled || g.stalled;
        for (auto& copy : g.tiling.copies) out.tiling.copies.push_back(std::move(copy));
    }
    out.covered = out.tiling.covered_count();
    return out;
}

}  // namespace hypertile
