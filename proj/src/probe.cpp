#include "hypertile/probe.hpp"

#include <stdexcept>

#include "hypertile/rng.hpp"
#include "hypertile/tiler.hpp"

namespace hypertile {

Hypergraph3 random_host(int n, const Rational& p, std::uint64_t seed) {
    if (p < Rational(0) || p > Rational(1)) throw std::invalid_argument("edge probability in [0,1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (rng.bernoulli(p.num(), p.den())) edges.push_back({i, j, k});
    return Hypergraph3(n, std::move(edges));
}

std::vector<ProbeRow> probe(const ProbeConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("probe: trials >= 1");
    if (config.n % config.spec.k != 0) throw std::invalid_argument("probe: k must divide n");
    for (const auto& f : config.density_grid)
        if (f < Rational(0) || f > Rational(1))
            throw std::invalid_argument("probe: grid fractions in [0,1]");

    Rng master(config.seed);
    std::vector<ProbeRow> rows;
    for (std::size_t gi = 0; gi < config.density_grid.size(); ++gi) {
        const Rational& fraction = config.density_grid[gi];
        ProbeRow row;
        row.fraction = fraction;
        long long degree_sum = 0;
        int tileable = 0;
        for (int t = 0; t < config.trials; ++t) {
            std::uint64_t trial_seed = master.split(gi * 1000003ULL + t).next();
            Hypergraph3 host = random_host(config.n, fraction, trial_seed);
            degree_sum += host.min_vertex_degree();
            tileable += has_perfect_tiling(host, config.spec).has_value();
        }
        row.mean_min_degree = static_cast<double>(degree_sum) / config.trials;
        row.tileable_share = static_cast<double>(tileable) / config.trials;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace hypertile
