/**
 * @file oracle.hpp
 * @brief Independent brute-force ground truth for small instances: exhaustive
 *        enumeration over the binary topology decisions with exact
 *        feasibility checks and LP dispatch.
 */

#ifndef NETPART_ORACLE_HPP
#define NETPART_ORACLE_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "netpart/graph.hpp"
#include "netpart/problem.hpp"
#include "netpart/simplex.hpp"

namespace netpart {

/// One fully specified binary configuration.
struct OracleConfiguration {
    SwitchState switch_state;
    std::vector<std::uint8_t> block_active;
    std::vector<std::uint8_t> leader_selected;  // canonical pick for optima
};

struct OracleResult {
    bool feasible = false;
    double objective = 0.0;
    std::vector<OracleConfiguration> optima;  // all argmin (z^sw, z^bl) topologies
    long long feasible_count = 0;             // full (z^sw, z^bl, z^ldr) triples
    long long enumeration_size = 0;           // nominal search-space size
};

namespace oracle_detail {

constexpr int kMaxSwitches = 12;
constexpr int kMaxBlocks = 12;
constexpr int kMaxLeaders = 12;

inline void check_guard_rails(const PartitionProblem& p) {
    if (p.switch_count() > kMaxSwitches || p.block_count() > kMaxBlocks ||
        static_cast<int>(p.eligible_providers().size()) > kMaxLeaders)
        throw std::invalid_argument(
            "oracle guard rails: instance exceeds 12 switches / 12 blocks / 12 leaders");
}

inline long long choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Number of admissible leader selections in a component with n eligible
/// leaders when the component is active: subsets of size 1..kappa.
inline long long leader_selection_count(int n, int kappa) {
    long long total = 0;
    for (int t = 1; t <= std::min(n, kappa); ++t) total += choose(n, t);
    return total;
}

/// Minimum generation cost of serving one active component, or nullopt when
/// the dispatch LP (balance, capacity, flow limits on the component tree) is
/// infeasible. Pure dispatch: binaries are fixed, so bounds carry the gating.
inline std::optional<double> component_dispatch(const PartitionProblem& problem,
                                                const ObjectiveSpec& obj,
                                                const std::vector<int>& blocks,
                                                const std::vector<SwitchId>& internal_switches) {
    MipModel lp;
    const auto providers = problem.all_providers();
    std::map<int, int> gen_var;   // provider flat index -> variable
    std::map<int, int> flow_var;  // switch id -> variable
    std::vector<char> in_comp(problem.block_count(), 0);
    for (int b : blocks) in_comp[b] = 1;
    for (int p = 0; p < static_cast<int>(providers.size()); ++p) {
        if (!in_comp[providers[p].block]) continue;
        const Provider& pr = problem.provider(providers[p]);
        double cost = p < static_cast<int>(obj.provider_costs.size()) ? obj.provider_costs[p] : 1.0;
        gen_var[p] = lp.add_variable("g" + std::to_string(p), VarKind::Continuous, pr.cmin,
                                     pr.cmax, (1.0 - obj.nu) * cost);
    }
    for (SwitchId s : internal_switches) {
        double r = problem.switches[s].rmax;
        flow_var[s] = lp.add_variable("r" + std::to_string(s), VarKind::Continuous, -r, r);
    }
    for (int b : blocks) {
        LinearRow row;
        row.sense = RowSense::EQ;
        row.rhs = -problem.block_demand(b);
        BlockId id = problem.blocks[b].id;
        for (SwitchId s : internal_switches) {
            if (problem.switches[s].from == id) row.terms.push_back({flow_var[s], 1.0});
            else if (problem.switches[s].to == id) row.terms.push_back({flow_var[s], -1.0});
        }
        for (auto [p, v] : gen_var)
            if (providers[p].block == b) row.terms.push_back({v, -1.0});
        lp.add_row(std::move(row));
    }
    LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::Infeasible) return std::nullopt;
    if (sol.status != LpStatus::Optimal)
        throw std::runtime_error("oracle dispatch LP did not solve");
    return sol.objective;
}

struct ComponentInfo {
    std::vector<int> blocks;                   // block indices
    std::vector<SwitchId> internal_switches;   // closed inside
    std::vector<int> eligible;                 // eligible-provider indices
    double shed_penalty = 0.0;                 // nu * sum alpha over blocks
    std::optional<double> active_cost;         // dispatch cost when active
};

/// Shared enumeration skeleton: visits every radial switch state with its
/// component structure and every feasible activity subset.
template <typename Visit>
void enumerate_states(const PartitionProblem& problem, const ObjectiveSpec& obj, Visit&& visit) {
    const int ns = problem.switch_count();
    const int nb = problem.block_count();
    std::map<std::pair<unsigned long long, unsigned long long>, std::optional<double>> memo;

    for (unsigned long long mask = 0; mask < (1ULL << ns); ++mask) {
        SwitchState state(ns);
        for (int s = 0; s < ns; ++s) state.set(s, (mask >> s) & 1ULL);
        if (!is_radial(problem, state)) continue;

        ComponentDecomposition comps = connected_components(problem, state);
        std::vector<ComponentInfo> info;
        for (const Component& c : comps.components) {
            ComponentInfo ci;
            for (BlockId id : c.blocks) ci.blocks.push_back(problem.block_index(id));
            ci.internal_switches = c.internal_switches;
            ci.eligible = c.eligible_leaders;
            for (int b : ci.blocks)
                ci.shed_penalty +=
                    obj.nu * obj.gamma * static_cast<double>(problem.blocks[b].consumers.size());
            if (!ci.eligible.empty()) {
                unsigned long long bmask = 0, smask = 0;
                for (int b : ci.blocks) bmask |= 1ULL << b;
                for (SwitchId s : ci.internal_switches) smask |= 1ULL << s;
                auto key = std::make_pair(bmask, smask);
                auto it = memo.find(key);
                if (it == memo.end())
                    it = memo.emplace(key, component_dispatch(problem, obj, ci.blocks,
                                                              ci.internal_switches))
                             .first;
                ci.active_cost = it->second;
            }
            info.push_back(std::move(ci));
        }

        // Components can be active only if they host an eligible leader and
        // their dispatch LP is feasible.
        std::vector<int> activatable;
        for (int c = 0; c < static_cast<int>(info.size()); ++c)
            if (!info[c].eligible.empty() && info[c].active_cost.has_value())
                activatable.push_back(c);

        double base_penalty = 0.0;
        for (const ComponentInfo& ci : info) base_penalty += ci.shed_penalty;

        for (unsigned long long amask = 0; amask < (1ULL << activatable.size()); ++amask) {
            double objective = base_penalty;
            std::vector<int> active_comps;
            for (std::size_t k = 0; k < activatable.size(); ++k) {
                if (!((amask >> k) & 1ULL)) continue;
                const ComponentInfo& ci = info[activatable[k]];
                objective += *ci.active_cost - ci.shed_penalty;
                active_comps.push_back(activatable[k]);
            }
            std::vector<std::uint8_t> block_active(nb, 0);
            for (int c : active_comps)
                for (int b : info[c].blocks) block_active[b] = 1;
            visit(state, info, active_comps, block_active, objective);
        }
    }
}

}  // namespace oracle_detail

/**
 * Exhaustive optimum over all z^sw x z^bl x z^ldr assignments: filters by
 * block-status consistency, radiality and the per-component leader bounds,
 * prices the survivors with the dispatch LP, and returns the minimum total
 * objective. Refuses instances beyond 12 switches / 12 blocks / 12 eligible
 * leaders.
 */
inline OracleResult enumerate_optimal(const PartitionProblem& problem,
                                      const ObjectiveSpec* objective = nullptr) {
    using namespace oracle_detail;
    problem.validate();
    check_guard_rails(problem);
    ObjectiveSpec obj = objective ? *objective : ObjectiveSpec::from_problem(problem);

    OracleResult out;
    out.enumeration_size = 1LL << (problem.switch_count() + problem.block_count() +
                                   static_cast<int>(problem.eligible_providers().size()));

    const double tie_tol = 1e-9;
    enumerate_states(problem, obj,
                     [&](const SwitchState& state, const std::vector<ComponentInfo>& info,
                         const std::vector<int>& active_comps,
                         const std::vector<std::uint8_t>& block_active, double obj_value) {
                         long long mult = 1;
                         for (int c : active_comps)
                             mult *= leader_selection_count(
                                 static_cast<int>(info[c].eligible.size()), problem.kappa);
                         out.feasible_count += mult;

                         if (!out.feasible || obj_value < out.objective - tie_tol) {
                             out.feasible = true;
                             out.objective = obj_value;
                             out.optima.clear();
                         }
                         if (obj_value <= out.objective + tie_tol) {
                             OracleConfiguration cfg;
                             cfg.switch_state = state;
                             cfg.block_active = block_active;
                             cfg.leader_selected.assign(problem.eligible_providers().size(), 0);
                             for (int c : active_comps)
                                 cfg.leader_selected[info[c].eligible.front()] = 1;
                             out.optima.push_back(std::move(cfg));
                         }
                     });
    return out;
}

/**
 * Visits every feasible (z^sw, z^bl, z^ldr) triple exactly once. Used to
 * replay cuts against the oracle's full feasible set.
 */
inline void enumerate_feasible(
    const PartitionProblem& problem,
    const std::function<void(const SwitchState&, const std::vector<std::uint8_t>&,
                             const std::vector<std::uint8_t>&)>& fn,
    const ObjectiveSpec* objective = nullptr) {
    using namespace oracle_detail;
    problem.validate();
    check_guard_rails(problem);
    ObjectiveSpec obj = objective ? *objective : ObjectiveSpec::from_problem(problem);
    const int nl = static_cast<int>(problem.eligible_providers().size());

    enumerate_states(
        problem, obj,
        [&](const SwitchState& state, const std::vector<ComponentInfo>& info,
            const std::vector<int>& active_comps, const std::vector<std::uint8_t>& block_active,
            double) {
            // Enumerate admissible leader subsets per active component.
            std::vector<std::uint8_t> leaders(nl, 0);
            std::function<void(std::size_t)> rec = [&](std::size_t k) {
                if (k == active_comps.size()) {
                    fn(state, block_active, leaders);
                    return;
                }
                const std::vector<int>& elig = info[active_comps[k]].eligible;
                const int n = static_cast<int>(elig.size());
                for (unsigned long long sub = 1; sub < (1ULL << n); ++sub) {
                    int cnt = __builtin_popcountll(sub);
                    if (cnt > problem.kappa) continue;
                    for (int i = 0; i < n; ++i)
                        if ((sub >> i) & 1ULL) leaders[elig[i]] = 1;
                    rec(k + 1);
                    for (int i = 0; i < n; ++i)
                        if ((sub >> i) & 1ULL) leaders[elig[i]] = 0;
                }
            };
            rec(0);
        });
}

/**
 * The oracle's feasibility filter for one fully specified binary assignment:
 * block-status consistency across closed switches, radiality, leader bounds
 * 1..kappa per active component, no leaders in inactive blocks, and a
 * feasible dispatch LP for every active component.
 */
inline bool feasibility_filter(const PartitionProblem& problem, const SwitchState& state,
                               const std::vector<std::uint8_t>& block_active,
                               const std::vector<std::uint8_t>& leader_selected,
                               const ObjectiveSpec* objective = nullptr) {
    using namespace oracle_detail;
    check_state(problem, state);
    ObjectiveSpec obj = objective ? *objective : ObjectiveSpec::from_problem(problem);

    for (int s = 0; s < problem.switch_count(); ++s) {
        if (!state.closed(s)) continue;
        auto [a, b] = problem.switch_endpoints(s);
        if (block_active[a] != block_active[b]) return false;
    }
    if (!is_radial(problem, state)) return false;

    const auto eligible = problem.eligible_providers();
    for (int g = 0; g < static_cast<int>(eligible.size()); ++g)
        if (leader_selected[g] && !block_active[eligible[g].block]) return false;

    ComponentDecomposition comps = connected_components(problem, state);
    for (const Component& c : comps.components) {
        int first = problem.block_index(c.blocks.front());
        if (!block_active[first]) continue;
        int count = 0;
        for (int g : c.eligible_leaders) count += leader_selected[g];
        if (count < 1 || count > problem.kappa) return false;
        std::vector<int> blocks;
        for (BlockId id : c.blocks) blocks.push_back(problem.block_index(id));
        if (!component_dispatch(problem, obj, blocks, c.internal_switches).has_value())
            return false;
    }
    return true;
}

}  // namespace netpart

#endif  // NETPART_ORACLE_HPP
