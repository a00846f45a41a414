/**
 * @file generator.hpp
 * @brief Seeded synthetic instance generation: connected switch graphs with
 *        demand/capacity scales that produce both full-service and shedding
 *        regimes across seeds.
 */

#ifndef NETPART_GENERATOR_HPP
#define NETPART_GENERATOR_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "netpart/problem.hpp"

namespace netpart {

struct GeneratorConfig {
    int blocks = 6;
    double switch_density = 0.3;  // fraction of the non-tree pairs added
    int providers = 2;
    unsigned seed = 1;
    int kappa = 1;
    double nu = 0.9;
    double gamma = 1.0;
};

/**
 * Deterministic random instance: a random spanning tree plus extra switches
 * up to the requested density, 1-3 consumers per block, providers spread
 * over distinct blocks with at least one leader-eligible, and flow limits
 * tight enough to bind occasionally.
 */
inline PartitionProblem generate_instance(const GeneratorConfig& cfg) {
    if (cfg.blocks < 1) throw std::invalid_argument("generator: blocks must be >= 1");
    if (cfg.providers < 1 || cfg.providers > cfg.blocks)
        throw std::invalid_argument("generator: providers must be in [1, blocks]");
    if (cfg.switch_density < 0.0 || cfg.switch_density > 1.0)
        throw std::invalid_argument("generator: switch_density must be in [0,1]");

    std::mt19937 rng(cfg.seed);
    const int n = cfg.blocks;
    PartitionProblem p;
    p.kappa = cfg.kappa;
    p.nu = cfg.nu;
    p.gamma = cfg.gamma;

    std::uniform_real_distribution<double> demand_dist(0.5, 2.0);
    std::uniform_int_distribution<int> consumer_count(1, 3);
    double total_demand = 0.0;
    for (int i = 0; i < n; ++i) {
        Block b;
        b.id = i;
        int nc = consumer_count(rng);
        for (int c = 0; c < nc; ++c) {
            double d = demand_dist(rng);
            total_demand += d;
            b.consumers.push_back({"m" + std::to_string(i) + "_" + std::to_string(c), d});
        }
        p.blocks.push_back(std::move(b));
    }

    // Providers on distinct random blocks; capacity scale swings between
    // shortage and surplus across seeds.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_real_distribution<double> cap_scale(0.6, 1.4);
    std::uniform_real_distribution<double> cost_dist(0.8, 1.25);
    std::bernoulli_distribution eligible(0.8);
    double capacity_budget = cap_scale(rng) * total_demand;
    for (int g = 0; g < cfg.providers; ++g) {
        Provider pr;
        pr.name = "g" + std::to_string(g);
        pr.cmin = 0.0;
        pr.cmax = capacity_budget / cfg.providers *
                  std::uniform_real_distribution<double>(0.6, 1.4)(rng);
        pr.cost = cost_dist(rng);
        pr.leader_eligible = g == 0 ? true : eligible(rng);
        p.blocks[order[g]].providers.push_back(std::move(pr));
    }

    // Random spanning tree, then extra edges up to the density.
    std::set<std::pair<int, int>> used;
    std::uniform_real_distribution<double> rmax_dist(0.3, 0.9);
    auto add_switch = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        used.insert({a, b});
        p.switches.push_back({a, b, std::max(0.5, rmax_dist(rng) * total_demand)});
    };
    for (int v = 1; v < n; ++v)
        add_switch(std::uniform_int_distribution<int>(0, v - 1)(rng), v);

    const long long all_pairs = static_cast<long long>(n) * (n - 1) / 2;
    const long long extra_target =
        std::llround(cfg.switch_density * static_cast<double>(all_pairs - (n - 1)));
    std::vector<std::pair<int, int>> candidates;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!used.count({a, b})) candidates.push_back({a, b});
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (long long e = 0; e < extra_target && e < static_cast<long long>(candidates.size());
         ++e)
        add_switch(candidates[e].first, candidates[e].second);

    p.validate();
    return p;
}

}  // namespace netpart

#endif  // NETPART_GENERATOR_HPP
