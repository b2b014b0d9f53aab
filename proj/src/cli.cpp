#include "hypertile/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hypertile/absorb.hpp"
#include "hypertile/constructions.hpp"
#include "hypertile/errors.hpp"
#include "hypertile/fractional.hpp"
#include "hypertile/io.hpp"
#include "hypertile/kspec.hpp"
#include "hypertile/lattice.hpp"
#include "hypertile/probe.hpp"
#include "hypertile/regularity.hpp"
#include "hypertile/tiler.hpp"

namespace hypertile::cli {

namespace {

using nlohmann::json;

KSpec parse_abc(const std::string& s) {
    int a, b, c;
    char c1, c2;
    std::istringstream is(s);
    is >> a >> c1 >> b >> c2 >> c;
    if (is.fail() || c1 != ',' || c2 != ',')
        throw std::invalid_argument("--abc expects a,b,c");
    return classify(a, b, c);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(Rational::parse(item));
    return out;
}

json exact_json(const ExactValue& v) {
    json j;
    j["kind"] = v.kind == ExactValue::Kind::SixMinusFourSqrt2 ? "six_minus_four_sqrt2" : "rational";
    if (v.kind == ExactValue::Kind::Rational) j["value"] = v.rat.str();
    j["approx"] = v.value();
    return j;
}

json copy_json(const KCopy& c) {
    return json{{"parts", {c.parts[0], c.parts[1], c.parts[2]}}};
}

std::string exact_pretty(const ExactValue& v) {
    std::ostringstream os;
    if (v.kind == ExactValue::Kind::SixMinusFourSqrt2)
        os << "6-4*sqrt(2) ≈ " << v.value();
    else
        os << v.rat.str() << " ≈ " << v.value();
    return os.str();
}

BarrierKind parse_kind(const std::string& s) {
    if (s == "s1") return BarrierKind::SpaceI;
    if (s == "s2") return BarrierKind::SpaceII;
    if (s == "d1") return BarrierKind::DivI;
    if (s == "d2") return BarrierKind::DivII;
    if (s == "d3") return BarrierKind::DivIII;
    if (s == "t") return BarrierKind::Tiling;
    throw std::invalid_argument("--kind expects s1|s2|d1|d2|d3|t|gen");
}

std::string cert_path_for(const std::string& out) {
    auto dot = out.rfind(".h3g");
    if (dot != std::string::npos && dot == out.size() - 4) return out.substr(0, dot) + ".cert";
    return out + ".cert";
}

int cmd_threshold(const KSpec& spec, bool as_json) {
    auto rep = threshold_coefficient(spec);
    if (as_json) {
        json j;
        j["abc"] = {spec.a, spec.b, spec.c};
        j["f"] = exact_json(rep.f);
        j["space1"] = rep.space1.str();
        j["space2"] = rep.space2.str();
        j["coefficient"] = exact_json(rep.coefficient);
        json dom = json::array();
        for (auto k : rep.dominant) dom.push_back(barrier_name(k));
        j["dominant_barrier"] = dom;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << spec.str() << " threshold coefficient: " << exact_pretty(rep.coefficient) << "\n";
    std::cout << "  f(a,b,c) = " << exact_pretty(rep.f) << "\n";
    std::cout << "  space barrier I coefficient  = " << rep.space1.str() << " ≈ "
              << rep.space1.to_double() << "\n";
    std::cout << "  space barrier II coefficient = " << rep.space2.str() << " ≈ "
              << rep.space2.to_double() << "\n";
    std::cout << "  dominant:";
    for (auto k : rep.dominant) std::cout << " " << barrier_name(k);
    std::cout << "\n";
    return 0;
}

int cmd_classify(const KSpec& spec, bool as_json) {
    if (as_json) {
        json j;
        j["abc"] = {spec.a, spec.b, spec.c};
        j["k"] = spec.k;
        j["gcd"] = spec.g;
        j["d"] = spec.d;
        j["type"] = spec.type0 ? "0" : std::to_string(spec.d);
        j["codegree_coefficient"] = codegree_coefficient(spec).str();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << spec.str() << ": k=" << spec.k << " gcd=" << spec.g << " d=" << spec.d
              << " type=" << (spec.type0 ? "0" : std::to_string(spec.d))
              << " codegree coefficient=" << codegree_coefficient(spec).str() << "\n";
    return 0;
}

int cmd_construct(const std::string& kind_str, const KSpec& spec, int n, const std::string& out,
                  int gr, int gi, const std::string& sizes_str, bool as_json) {
    if (kind_str == "gen") {
        if (gr <= 0 || gi <= 0 || sizes_str.empty())
            throw std::invalid_argument("construct gen needs --r, --i and --sizes");
        auto inst = generate_general(gr, gi, parse_int_list(sizes_str), n);
        if (!out.empty()) {
            std::ofstream f(out);
            if (!f) throw std::runtime_error("cannot write " + out);
            f << "# r-uniform space barrier, r=" << inst.r << " i=" << inst.i << "\n";
            f << "n " << inst.n << "\n";
            for (const auto& e : inst.edges) {
                for (std::size_t j = 0; j < e.size(); ++j) f << (j ? " " : "") << e[j];
                f << "\n";
            }
        }
        if (as_json) {
            json j;
            j["r"] = inst.r;
            j["i"] = inst.i;
            j["n"] = inst.n;
            j["part_a"] = inst.part_a;
            j["edges"] = inst.edges.size();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "r-uniform space barrier: r=" << inst.r << " i=" << inst.i
                      << " n=" << inst.n << " |A_i|=" << inst.part_a << " edges=" << inst.edges.size()
                      << "\n";
        }
        return 0;
    }

    BarrierKind kind = parse_kind(kind_str);
    auto inst = generate(kind, spec, n);
    auto cert = check_certificate(inst);
    std::ostringstream report;
    report << "kind: " << barrier_name(kind) << "\n";
    report << "spec: " << spec.str() << "\n";
    report << "n: " << inst.n << "\n";
    report << "parts:";
    for (int i = 1; i <= inst.parts.r(); ++i) report << " " << inst.parts.part(i).size();
    report << "\n";
    report << "predicted delta_1: " << inst.predicted_min_degree << "\n";
    report << "certificate: " << (cert.ok ? "ok" : "VIOLATED") << (cert.sampled ? " (sampled)" : "")
           << " - " << cert.detail << "\n";

    if (!out.empty()) {
        write_h3g_file(out, inst.graph);
        std::ofstream certf(cert_path_for(out));
        if (!certf) throw std::runtime_error("cannot write certificate report");
        certf << report.str();
    }
    if (as_json) {
        json j;
        j["kind"] = barrier_name(kind);
        j["abc"] = {spec.a, spec.b, spec.c};
        j["n"] = inst.n;
        json parts = json::array();
        for (int i = 1; i <= inst.parts.r(); ++i) parts.push_back(inst.parts.part(i).size());
        j["part_sizes"] = parts;
        j["predicted_min_degree"] = inst.predicted_min_degree;
        j["certificate_ok"] = cert.ok;
        j["certificate_sampled"] = cert.sampled;
        j["certificate_detail"] = cert.detail;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << report.str();
    }
    return cert.ok ? 0 : 1;
}

int cmd_tile(const std::string& file, const KSpec& spec, bool perfect, bool greedy,
             const std::string& parts_file, const std::string& eps_str, bool as_json) {
    auto loaded = read_h3g_file(file);
    const Hypergraph3& h = loaded.graph;

    if (greedy) {
        if (parts_file.empty() || eps_str.empty())
            throw std::invalid_argument("tile --greedy needs --parts and --eps");
        auto p = read_part_file(parts_file, h.n());
        if (p.r() != 3) throw std::invalid_argument("greedy needs exactly 3 non-V0 parts");
        std::array<std::vector<int>, 3> v{p.part(1), p.part(2), p.part(3)};
        std::sort(v.begin(), v.end(),
                  [](const auto& x, const auto& y) { return x.size() < y.size(); });
        auto res = greedy_regular_tiling(h, v[0], v[1], v[2], spec, Rational::parse(eps_str));
        long long leftover = res.leftover[0] + res.leftover[1] + res.leftover[2];
        if (as_json) {
            json j;
            j["copies"] = res.tiling.copies.size();
            j["covered"] = res.tiling.covered_count();
            j["leftover"] = leftover;
            j["stalled"] = res.stalled;
            j["invariant_held"] = res.invariant_held;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "greedy tiling: " << res.tiling.copies.size() << " copies, covered "
                      << res.tiling.covered_count() << ", leftover " << leftover
                      << (res.stalled ? " (stalled)" : "") << "\n";
        }
        return 0;
    }

    if (perfect) {
        auto t = has_perfect_tiling(h, spec);
        if (as_json) {
            json j;
            j["perfect"] = t.has_value();
            if (t) {
                json copies = json::array();
                for (const auto& c : t->copies) copies.push_back(copy_json(c));
                j["copies"] = copies;
            }
            std::cout << j.dump(2) << "\n";
        } else if (t) {
            std::cout << "perfect tiling with " << t->copies.size() << " copies\n";
        } else {
            std::cout << "no perfect tiling\n";
        }
        return t ? 0 : 1;
    }

    auto res = max_tiling(h, spec);
    if (as_json) {
        json j;
        j["size"] = res.tiling.copies.size();
        j["covered"] = res.tiling.covered_count();
        j["optimal"] = res.optimal;
        json copies = json::array();
        for (const auto& c : res.tiling.copies) copies.push_back(copy_json(c));
        j["copies"] = copies;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "maximum tiling: " << res.tiling.copies.size() << " copies, covered "
                  << res.tiling.covered_count() << " of " << h.n()
                  << (res.optimal ? "" : " (lower bound only)") << "\n";
    }
    return res.optimal ? 0 : 3;
}

int cmd_fractional_verify(const std::string& file, const std::string& weights, const KSpec& spec,
                          bool as_json) {
    auto loaded = read_h3g_file(file);
    auto ft = read_fht_file(weights, loaded.graph, loaded.file_order);
    auto res = verify(ft, spec);
    if (as_json) {
        json j;
        j["valid"] = res.valid;
        if (res.valid) {
            j["weight"] = res.weight.str();
            j["hmin"] = res.hmin ? json(res.hmin->str()) : json(nullptr);
        } else {
            j["violation"] = res.violation;
        }
        std::cout << j.dump(2) << "\n";
    } else if (res.valid) {
        std::cout << "valid: w(h) = " << res.weight.str() << ", hmin = "
                  << (res.hmin ? res.hmin->str() : "none") << "\n";
    } else {
        std::cout << "invalid: " << res.violation << "\n";
    }
    return res.valid ? 0 : 1;
}

int cmd_fractional_gadget(const KSpec& spec, const std::string& family, const std::string& label,
                          const std::string& out_h3g, const std::string& out_fht, bool as_json) {
    GadgetResult res;
    if (family == "l1") {
        auto c = parse_l1_case(label);
        if (!c) throw std::invalid_argument("unknown l1 case (z | y-a<b | y-a=b)");
        res = gadget_L1(spec, *c);
    } else if (family == "l2") {
        auto c = parse_l2_case(label);
        if (!c) throw std::invalid_argument(
            "unknown l2 case (1-zz | 1.1-zy | 1.1-yy+zx | 1.2-two-zx-zy | 1.2-cross | 2.1 | 2.2 | "
            "2.3 | 2.3-coincident)");
        res = gadget_L2(spec, *c);
    } else {
        throw std::invalid_argument("--family expects l1|l2");
    }
    if (!out_h3g.empty()) write_h3g_file(out_h3g, res.graph);
    if (!out_fht.empty()) {
        std::ofstream f(out_fht);
        if (!f) throw std::runtime_error("cannot write " + out_fht);
        write_fht(f, res.tiling);
    }
    auto check = verify(res.tiling, spec);
    if (as_json) {
        json j;
        j["family"] = family;
        j["case"] = res.case_label;
        j["weight"] = res.weight.str();
        j["hmin"] = res.hmin.str();
        j["valid"] = check.valid;
        j["link_edges"] = res.link_edges;
        j["n"] = res.graph.n();
        j["edges"] = res.graph.edge_count();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << family << " gadget, case " << res.case_label << ": w(h) = " << res.weight.str()
                  << ", hmin = " << res.hmin.str() << ", " << (check.valid ? "valid" : "INVALID")
                  << ", link edges " << res.link_edges << "\n";
    }
    return check.valid ? 0 : 1;
}

int cmd_lattice(const std::string& file, const std::string& parts_file, const KSpec& spec,
                const std::string& mu_str, long long min_count, bool as_json) {
    auto loaded = read_h3g_file(file);
    auto p = read_part_file(parts_file, loaded.graph.n());
    std::optional<long long> mc;
    Rational mu(0);
    if (min_count >= 0)
        mc = min_count;
    else if (!mu_str.empty())
        mu = Rational::parse(mu_str);
    else
        throw std::invalid_argument("lattice needs --mu or --min-count");

    auto edge_vecs = mc ? edge_vector_counts(loaded.graph, p)
                        : robust_edge_vectors(loaded.graph, p, mu);
    if (mc)
        edge_vecs.erase(std::remove_if(edge_vecs.begin(), edge_vecs.end(),
                                       [&](const VectorCount& vc) { return vc.count < *mc; }),
                        edge_vecs.end());
    auto res = transferral_check(loaded.graph, p, spec, mu, mc);

    if (as_json) {
        json j;
        json ev = json::array();
        for (const auto& vc : edge_vecs) ev.push_back({{"vector", vc.vec}, {"count", vc.count}});
        j["edge_vectors"] = ev;
        json kv = json::array();
        for (const auto& vc : res.k_vectors) kv.push_back({{"vector", vc.vec}, {"count", vc.count}});
        j["k_vectors"] = kv;
        j["transferral_pass"] = res.pass;
        json miss = json::array();
        for (auto [a, b] : res.missing) miss.push_back({a, b});
        j["missing_pairs"] = miss;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "robust edge vectors:";
        for (const auto& vc : edge_vecs) {
            std::cout << " (";
            for (std::size_t i = 0; i < vc.vec.size(); ++i)
                std::cout << (i ? "," : "") << vc.vec[i];
            std::cout << ")x" << vc.count;
        }
        std::cout << "\nrobust K-vectors:";
        for (const auto& vc : res.k_vectors) {
            std::cout << " (";
            for (std::size_t i = 0; i < vc.vec.size(); ++i)
                std::cout << (i ? "," : "") << vc.vec[i];
            std::cout << ")x" << vc.count;
        }
        std::cout << "\ntransferral: " << (res.pass ? "pass" : "FAIL");
        for (auto [a, b] : res.missing) std::cout << " u" << a << "-u" << b;
        std::cout << "\n";
    }
    return res.pass ? 0 : 1;
}

int cmd_reduce(const std::string& file, const std::string& eps_str, const std::string& out,
               bool as_json) {
    auto loaded = read_h3g_file(file);
    auto res = epsilon_reduction(loaded.graph, Rational::parse(eps_str));
    if (!out.empty()) write_h3g_file(out, res.reduced);
    if (as_json) {
        json j;
        j["n"] = loaded.graph.n();
        j["edges"] = loaded.graph.edge_count();
        j["weak_edges"] = res.weak_edges;
        j["removed_vertices"] = res.removed;
        j["strong_edges_kept"] = res.reduced.edge_count();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "weak edges: " << res.weak_edges << ", removed vertices: "
                  << res.removed.size() << ", kept strong edges: " << res.reduced.edge_count()
                  << "\n";
    }
    return 0;
}

int cmd_reach(const std::string& file, const KSpec& spec, int u, int v, int i, long long samples,
              std::uint64_t seed, bool as_json) {
    auto loaded = read_h3g_file(file);
    ReachabilityReport rep;
    if (samples > 0)
        rep = reachability_estimate(loaded.graph, u, v, spec, i, samples, seed);
    else
        rep = reachability_count(loaded.graph, u, v, spec, i);
    if (as_json) {
        json j;
        j["u"] = rep.u;
        j["v"] = rep.v;
        j["i"] = rep.i;
        j["witnesses"] = rep.witness_count;
        j["total"] = rep.total;
        j["normalized"] = rep.normalized.str();
        j["sampled"] = rep.sampled;
        if (rep.sampled) j["samples"] = rep.samples;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "witnesses(" << u << "," << v << "; i=" << i << "): " << rep.witness_count
                  << (rep.sampled ? " of sampled " + std::to_string(rep.samples)
                                  : " of " + std::to_string(rep.total))
                  << " (" << rep.normalized.str() << ")\n";
    }
    return 0;
}

int cmd_absorb_count(const std::string& file, const KSpec& spec, const std::string& s_str, int m,
                     bool as_json) {
    auto loaded = read_h3g_file(file);
    auto s = parse_int_list(s_str);
    long long count = count_absorbing_sets(loaded.graph, s, m, spec);
    if (as_json) {
        json j;
        j["S"] = s;
        j["m"] = m;
        j["absorbing_sets"] = count;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "absorbing " << m << "-sets for S: " << count << "\n";
    }
    return 0;
}

int cmd_absorb_family(const std::string& file, const KSpec& spec, int i0, std::uint64_t seed,
                      const std::string& p_str, bool as_json) {
    auto loaded = read_h3g_file(file);
    auto fam = build_absorbing_family(loaded.graph, spec, i0, seed, Rational::parse(p_str));
    if (as_json) {
        json j;
        j["m"] = fam.m;
        j["members"] = fam.sets;
        j["witnesses"] = fam.witnesses;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "absorbing family: " << fam.sets.size() << " disjoint " << fam.m << "-sets\n";
    }
    return 0;
}

int cmd_probe(const KSpec& spec, int n, const std::string& grid_str, int trials,
              std::uint64_t seed, bool as_json) {
    ProbeConfig config;
    config.spec = spec;
    config.n = n;
    config.density_grid = parse_rational_list(grid_str);
    config.trials = trials;
    config.seed = seed;
    auto rows = probe(config);
    if (as_json) {
        json j = json::array();
        for (const auto& r : rows)
            j.push_back({{"fraction", r.fraction.str()},
                         {"mean_min_degree", r.mean_min_degree},
                         {"tileable_share", r.tileable_share}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "fraction  mean_delta1  tileable_share\n";
        for (const auto& r : rows)
            std::cout << r.fraction.str() << "  " << r.mean_min_degree << "  " << r.tileable_share
                      << "\n";
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"hypertile: exact K_{a,b,c}-tiling laboratory for 3-graphs"};
    app.require_subcommand(1);

    std::string abc, file, out, parts_file, weights, eps_str, kind, family, case_label, s_str,
        grid_str, mu_str, sizes_str, p_str, out_fht;
    int n = 0, u = 0, v = 0, depth = 1, m = 0, trials = 10, i0 = 1, gr = 0, gi = 0;
    long long min_count = -1, samples = 0;
    std::uint64_t seed = 1;
    bool as_json = false, perfect = false, greedy = false;

    app.add_flag("--json", as_json, "machine-readable output");

    auto* threshold = app.add_subcommand("threshold", "vertex-degree threshold coefficient");
    threshold->add_option("--abc", abc)->required();

    auto* classify_cmd = app.add_subcommand("classify", "tile classification and codegree coefficient");
    classify_cmd->add_option("--abc", abc)->required();

    auto* construct = app.add_subcommand("construct", "generate an extremal barrier instance");
    construct->add_option("--kind", kind)->required();
    construct->add_option("--abc", abc);
    construct->add_option("--n", n)->required();
    construct->add_option("--out", out);
    construct->add_option("--r", gr);
    construct->add_option("--i", gi);
    construct->add_option("--sizes", sizes_str);

    auto* tile = app.add_subcommand("tile", "maximum / perfect / greedy tiling");
    tile->add_option("--file", file)->required();
    tile->add_option("--abc", abc)->required();
    tile->add_flag("--perfect", perfect);
    tile->add_flag("--greedy", greedy);
    tile->add_option("--parts", parts_file);
    tile->add_option("--eps", eps_str);

    auto* fractional = app.add_subcommand("fractional", "fractional hom(K)-tilings");
    auto* fverify = fractional->add_subcommand("verify", "verify a weighting file");
    fverify->add_option("--file", file)->required();
    fverify->add_option("--weights", weights)->required();
    fverify->add_option("--abc", abc)->required();
    auto* fgadget = fractional->add_subcommand("gadget", "build a proof-case gadget");
    fgadget->add_option("--abc", abc)->required();
    fgadget->add_option("--family", family)->required();
    fgadget->add_option("--case", case_label)->required();
    fgadget->add_option("--out-h3g", out);
    fgadget->add_option("--out-fht", out_fht);

    auto* lattice = app.add_subcommand("lattice", "robust vectors and transferral check");
    lattice->add_option("--file", file)->required();
    lattice->add_option("--parts", parts_file)->required();
    lattice->add_option("--abc", abc)->required();
    lattice->add_option("--mu", mu_str);
    lattice->add_option("--min-count", min_count);

    auto* reduce = app.add_subcommand("reduce", "weak-edge reduction H_eps");
    reduce->add_option("--file", file)->required();
    reduce->add_option("--eps", eps_str)->required();
    reduce->add_option("--out", out);

    auto* reach = app.add_subcommand("reach", "reachability witness counting");
    reach->add_option("--file", file)->required();
    reach->add_option("--abc", abc)->required();
    reach->add_option("--u", u)->required();
    reach->add_option("--v", v)->required();
    reach->add_option("--i", depth);
    reach->add_option("--sample", samples);
    reach->add_option("--seed", seed);

    auto* absorb = app.add_subcommand("absorb", "absorbing sets and families");
    auto* acount = absorb->add_subcommand("count", "count absorbing m-sets for S");
    acount->add_option("--file", file)->required();
    acount->add_option("--abc", abc)->required();
    acount->add_option("--S", s_str)->required();
    acount->add_option("--m", m)->required();
    auto* afamily = absorb->add_subcommand("family", "seeded absorbing family");
    afamily->add_option("--file", file)->required();
    afamily->add_option("--abc", abc)->required();
    afamily->add_option("--i0", i0);
    afamily->add_option("--seed", seed);
    afamily->add_option("--p", p_str)->required();

    auto* probe_cmd = app.add_subcommand("probe", "random-host tileability probe");
    probe_cmd->add_option("--abc", abc)->required();
    probe_cmd->add_option("--n", n)->required();
    probe_cmd->add_option("--grid", grid_str)->required();
    probe_cmd->add_option("--trials", trials);
    probe_cmd->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*threshold) return cmd_threshold(parse_abc(abc), as_json);
        if (*classify_cmd) return cmd_classify(parse_abc(abc), as_json);
        if (*construct) {
            KSpec spec = kind == "gen" ? classify(1, 1, 1) : parse_abc(abc);
            return cmd_construct(kind, spec, n, out, gr, gi, sizes_str, as_json);
        }
        if (*tile)
            return cmd_tile(file, parse_abc(abc), perfect, greedy, parts_file, eps_str, as_json);
        if (*fverify) return cmd_fractional_verify(file, weights, parse_abc(abc), as_json);
        if (*fgadget)
            return cmd_fractional_gadget(parse_abc(abc), family, case_label, out, out_fht, as_json);
        if (*lattice)
            return cmd_lattice(file, parts_file, parse_abc(abc), mu_str, min_count, as_json);
        if (*reduce) return cmd_reduce(file, eps_str, out, as_json);
        if (*reach)
            return cmd_reach(file, parse_abc(abc), u, v, depth, samples, seed, as_json);
        if (*acount) return cmd_absorb_count(file, parse_abc(abc), s_str, m, as_json);
        if (*afamily) return cmd_absorb_family(file, parse_abc(abc), i0, seed, p_str, as_json);
        if (*probe_cmd) return cmd_probe(parse_abc(abc), n, grid_str, trials, seed, as_json);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const SizeLimitError& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(const std::vector<std::string>& args) {
    std::vector<std::string> full;
    full.push_back("hypertile");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : full) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace hypertile::cli
