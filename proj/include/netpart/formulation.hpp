/**
 * @file formulation.hpp
 * @brief Translates a PartitionProblem into MipModel rows: operational core,
 *        multi-commodity radiality family and coloring-based leader family,
 *        plus the relaxed variants used by the cutting-plane drivers.
 *
 * Formulation notes
 * -----------------
 * Radiality. Closed switches must form a forest over the blocks, with the
 * component structure endogenous. We augment the switch graph with one
 * selectable virtual edge from a designated root block to every other block
 * (selection variable w_l) and require the augmented graph to be a spanning
 * tree: per-block commodities routed from the root certify connectivity, and
 * a single cardinality row sum(lambda) + sum(w) = |B| - 1 pins the edge
 * count. For any fixed 0/1 switch assignment the continuous (lambda, w, f)
 * system is feasible exactly when the closed switches are acyclic: each
 * component without the root needs virtual entry capacity >= 1, so
 * sum(w) >= K - 1, while the cardinality row forces sum(w) = K - 1 - cycles.
 *
 * Leaders. Every active component must host between 1 and kappa leaders,
 * leaders may only sit in active blocks, and isolated active blocks carry
 * their own bounds. Coloring variables y^l_ij mark closed switches with the
 * identity of a leader-hosting block; a per-switch budget row makes coloring
 * levels sum to at most one, per-block participation rows tie a block's
 * leader count to kappa times its coloring level, and a per-block hub level
 * Y^l synchronised across the block's component (gated by shortest-open-path
 * potentials pi) makes those levels comparable across the component. The
 * eta/xi flow systems verify that a block only colors switches incident to
 * blocks it can actually reach over closed switches.
 */

#ifndef NETPART_FORMULATION_HPP
#define NETPART_FORMULATION_HPP

#include <string>
#include <vector>

#include "netpart/model.hpp"
#include "netpart/problem.hpp"

namespace netpart {

/// Weights of the minimized objective
///   nu * sum_l alpha_l (1 - z^bl_l) + (1 - nu) * sum_g cost_g r^gen_g.
struct ObjectiveSpec {
    double nu = 0.9;
    double gamma = 1.0;
    std::vector<double> provider_costs;  // flat all_providers() order

    static ObjectiveSpec from_problem(const PartitionProblem& p) {
        ObjectiveSpec spec;
        spec.nu = p.nu;
        spec.gamma = p.gamma;
        for (const ProviderRef& r : p.all_providers())
            spec.provider_costs.push_back(p.provider(r).cost);
        return spec;
    }
};

enum class BuildMode { Full, RelaxRadiality, RelaxLeader, RelaxBoth };

/// Variable handles of a built model. Vectors are empty when the owning
/// constraint family is not part of the model.
struct VariableMap {
    // Core decision variables.
    std::vector<int> z_sw;    // per switch
    std::vector<int> z_bl;    // per block index
    std::vector<int> z_ldr;   // per eligible provider (eligible_providers order)
    std::vector<int> r_gen;   // per provider (all_providers order)
    std::vector<int> r_flow;  // per switch, signed from->to

    // Radiality family.
    bool has_radiality = false;
    int root_block = -1;                              // designated root block index
    std::vector<int> lambda_fwd, lambda_rev;          // per switch
    std::vector<int> w_virtual;                       // per block (-1 at root)
    std::vector<int> commodity_block;                 // commodity -> block index
    std::vector<std::vector<int>> f_fwd, f_rev;       // [commodity][switch]
    std::vector<std::vector<int>> f_virt;             // [commodity][block] (-1 unused)

    // Leader family.
    bool has_leader = false;
    std::vector<int> elig_blocks;                     // block indices hosting eligible providers
    std::vector<std::vector<int>> y;                  // [elig pos][switch]
    std::vector<int> y_level;                         // [elig pos]
    std::vector<std::vector<int>> pi;                 // [elig pos][block]
    std::vector<std::vector<int>> eta;                // [elig pos][switch]
    std::vector<std::vector<int>> xi;                 // [elig pos][block] (-1 at own block)
};

namespace detail {

inline std::string idx_name(const char* stem, int a) {
    return std::string(stem) + "_" + std::to_string(a);
}
inline std::string idx_name(const char* stem, int a, int b) {
    return std::string(stem) + "_" + std::to_string(a) + "_" + std::to_string(b);
}

/// Eligible z^ldr variable indices grouped by block index.
inline std::vector<std::vector<int>> leaders_by_block(const PartitionProblem& problem,
                                                      const VariableMap& vars) {
    std::vector<std::vector<int>> by_block(problem.block_count());
    auto eligible = problem.eligible_providers();
    for (int g = 0; g < static_cast<int>(eligible.size()); ++g)
        by_block[eligible[g].block].push_back(vars.z_ldr[g]);
    return by_block;
}

}  // namespace detail

/// Allocates the core decision variables and sets the objective.
inline void allocate_core_variables(MipModel& model, const PartitionProblem& problem,
                                    VariableMap& vars, const ObjectiveSpec& obj) {
    using detail::idx_name;
    for (int s = 0; s < problem.switch_count(); ++s)
        vars.z_sw.push_back(model.add_variable(idx_name("zsw", s), VarKind::Binary, 0, 1));
    double offset = 0.0;
    for (int b = 0; b < problem.block_count(); ++b) {
        double alpha = obj.gamma * static_cast<double>(problem.blocks[b].consumers.size());
        offset += obj.nu * alpha;
        vars.z_bl.push_back(
            model.add_variable(idx_name("zbl", b), VarKind::Binary, 0, 1, -obj.nu * alpha));
    }
    model.objective_offset += offset;
    const auto eligible = problem.eligible_providers();
    for (int g = 0; g < static_cast<int>(eligible.size()); ++g)
        vars.z_ldr.push_back(model.add_variable(idx_name("zldr", g), VarKind::Binary, 0, 1));
    const auto providers = problem.all_providers();
    for (int p = 0; p < static_cast<int>(providers.size()); ++p) {
        const Provider& pr = problem.provider(providers[p]);
        double cost = p < static_cast<int>(obj.provider_costs.size()) ? obj.provider_costs[p] : 1.0;
        vars.r_gen.push_back(model.add_variable(idx_name("rgen", p), VarKind::Continuous,
                                                std::min(0.0, pr.cmin), std::max(0.0, pr.cmax),
                                                (1.0 - obj.nu) * cost));
    }
    for (int s = 0; s < problem.switch_count(); ++s) {
        double r = problem.switches[s].rmax;
        vars.r_flow.push_back(
            model.add_variable(idx_name("rflow", s), VarKind::Continuous, -r, r));
    }
}

/**
 * Operational core: resource balance, generation capacity, flow limits and
 * block-status consistency across closed switches.
 */
inline void add_core_constraints(MipModel& model, const PartitionProblem& problem,
                                 const VariableMap& vars) {
    using detail::idx_name;
    const auto providers = problem.all_providers();

    // Per-block balance: net outgoing flow = generation - z^bl * demand.
    for (int b = 0; b < problem.block_count(); ++b) {
        LinearRow row;
        row.name = idx_name("balance", b);
        row.sense = RowSense::EQ;
        row.rhs = 0.0;
        BlockId id = problem.blocks[b].id;
        for (int s = 0; s < problem.switch_count(); ++s) {
            if (problem.switches[s].from == id) row.terms.push_back({vars.r_flow[s], 1.0});
            else if (problem.switches[s].to == id) row.terms.push_back({vars.r_flow[s], -1.0});
        }
        for (int p = 0; p < static_cast<int>(providers.size()); ++p)
            if (providers[p].block == b) row.terms.push_back({vars.r_gen[p], -1.0});
        row.terms.push_back({vars.z_bl[b], problem.block_demand(b)});
        model.add_row(std::move(row));
    }

    // Generation bounds gated by block activity.
    for (int p = 0; p < static_cast<int>(providers.size()); ++p) {
        const Provider& pr = problem.provider(providers[p]);
        int zb = vars.z_bl[providers[p].block];
        model.add_row({{{vars.r_gen[p], 1.0}, {zb, -pr.cmax}}, RowSense::LE, 0.0,
                       idx_name("gen_ub", p)});
        model.add_row({{{vars.r_gen[p], 1.0}, {zb, -pr.cmin}}, RowSense::GE, 0.0,
                       idx_name("gen_lb", p)});
    }

    // |r^flow| <= z^sw * rmax, linearized as two one-sided rows.
    for (int s = 0; s < problem.switch_count(); ++s) {
        double r = problem.switches[s].rmax;
        model.add_row({{{vars.r_flow[s], 1.0}, {vars.z_sw[s], -r}}, RowSense::LE, 0.0,
                       idx_name("flow_ub", s)});
        model.add_row({{{vars.r_flow[s], 1.0}, {vars.z_sw[s], r}}, RowSense::GE, 0.0,
                       idx_name("flow_lb", s)});
    }

    // |z^bl_i - z^bl_j| <= 1 - z^sw_ij.
    for (int s = 0; s < problem.switch_count(); ++s) {
        auto [a, b] = problem.switch_endpoints(s);
        model.add_row({{{vars.z_bl[a], 1.0}, {vars.z_bl[b], -1.0}, {vars.z_sw[s], 1.0}},
                       RowSense::LE, 1.0, idx_name("status_a", s)});
        model.add_row({{{vars.z_bl[b], 1.0}, {vars.z_bl[a], -1.0}, {vars.z_sw[s], 1.0}},
                       RowSense::LE, 1.0, idx_name("status_b", s)});
    }
}

/**
 * Per-block leader bounds: isolated active blocks need a leader of their own,
 * and leaders may only sit in active blocks. These operational rows stay in
 * the model in every mode; the coloring family below is what gets relaxed.
 */
inline void add_block_leader_bounds(MipModel& model, const PartitionProblem& problem,
                                    const VariableMap& vars) {
    using detail::idx_name;
    const auto by_block = detail::leaders_by_block(problem, vars);
    for (int b = 0; b < problem.block_count(); ++b) {
        LinearRow lower;
        lower.name = idx_name("blk_ldr_lb", b);
        lower.sense = RowSense::LE;
        lower.rhs = 0.0;
        lower.terms.push_back({vars.z_bl[b], 1.0});
        for (SwitchId s : problem.incident_switches(b)) lower.terms.push_back({vars.z_sw[s], -1.0});
        for (int v : by_block[b]) lower.terms.push_back({v, -1.0});
        model.add_row(std::move(lower));

        if (by_block[b].empty()) continue;
        LinearRow upper;
        upper.name = idx_name("blk_ldr_ub", b);
        upper.sense = RowSense::LE;
        upper.rhs = 0.0;
        for (int v : by_block[b]) upper.terms.push_back({v, 1.0});
        upper.terms.push_back({vars.z_bl[b], -static_cast<double>(problem.kappa)});
        model.add_row(std::move(upper));
    }
}

/// Root block for the radiality commodities: lowest BlockId among blocks with
/// at least one provider, else lowest BlockId overall.
inline int radiality_root(const PartitionProblem& problem,
                          const std::vector<int>& component_blocks) {
    int root = -1;
    for (int b : component_blocks) {
        if (problem.blocks[b].providers.empty()) continue;
        if (root < 0 || problem.blocks[b].id < problem.blocks[root].id) root = b;
    }
    if (root >= 0) return root;
    for (int b : component_blocks)
        if (root < 0 || problem.blocks[b].id < problem.blocks[root].id) root = b;
    return root;
}

/**
 * Radiality family over `component_blocks` (all blocks in the monolithic
 * model): directed multi-commodity flows from the designated root over real
 * switch arcs (lambda) and selectable virtual root arcs (w), with the
 * spanning-tree cardinality row and lambda linked to z^sw.
 */
inline void add_radiality_constraints(MipModel& model, const PartitionProblem& problem,
                                      VariableMap& vars,
                                      const std::vector<int>& component_blocks) {
    using detail::idx_name;
    const int nb = problem.block_count();
    std::vector<char> in_set(nb, 0);
    for (int b : component_blocks) in_set[b] = 1;

    std::vector<int> switches_inside;
    for (int s = 0; s < problem.switch_count(); ++s) {
        auto [a, b] = problem.switch_endpoints(s);
        if (in_set[a] && in_set[b]) switches_inside.push_back(s);
    }

    vars.has_radiality = true;
    vars.root_block = radiality_root(problem, component_blocks);
    vars.lambda_fwd.assign(problem.switch_count(), -1);
    vars.lambda_rev.assign(problem.switch_count(), -1);
    vars.w_virtual.assign(nb, -1);
    for (int s : switches_inside) {
        vars.lambda_fwd[s] = model.add_variable(idx_name("lam_f", s), VarKind::Continuous, 0, 1);
        vars.lambda_rev[s] = model.add_variable(idx_name("lam_r", s), VarKind::Continuous, 0, 1);
    }
    for (int b : component_blocks)
        if (b != vars.root_block)
            vars.w_virtual[b] = model.add_variable(idx_name("w", b), VarKind::Continuous, 0, 1);

    // lambda_ij + lambda_ji = z^sw_ij.
    for (int s : switches_inside)
        model.add_row({{{vars.lambda_fwd[s], 1.0}, {vars.lambda_rev[s], 1.0}, {vars.z_sw[s], -1.0}},
                       RowSense::EQ, 0.0, idx_name("lam_link", s)});

    // Spanning-tree cardinality over the augmented graph.
    {
        LinearRow card;
        card.name = "tree_card";
        card.sense = RowSense::EQ;
        card.rhs = static_cast<double>(component_blocks.size()) - 1.0;
        for (int s : switches_inside) {
            card.terms.push_back({vars.lambda_fwd[s], 1.0});
            card.terms.push_back({vars.lambda_rev[s], 1.0});
        }
        for (int b : component_blocks)
            if (vars.w_virtual[b] >= 0) card.terms.push_back({vars.w_virtual[b], 1.0});
        model.add_row(std::move(card));
    }

    // One commodity per non-root block, with conservation and capacity rows.
    for (int k : component_blocks) {
        if (k == vars.root_block) continue;
        int commodity = static_cast<int>(vars.commodity_block.size());
        vars.commodity_block.push_back(k);
        vars.f_fwd.emplace_back(problem.switch_count(), -1);
        vars.f_rev.emplace_back(problem.switch_count(), -1);
        vars.f_virt.emplace_back(nb, -1);
        auto& ff = vars.f_fwd.back();
        auto& fr = vars.f_rev.back();
        auto& fv = vars.f_virt.back();
        for (int s : switches_inside) {
            ff[s] = model.add_variable(idx_name("f_f", commodity, s), VarKind::Continuous, 0, 1);
            fr[s] = model.add_variable(idx_name("f_r", commodity, s), VarKind::Continuous, 0, 1);
            model.add_row({{{ff[s], 1.0}, {vars.lambda_fwd[s], -1.0}}, RowSense::LE, 0.0,
                           idx_name("f_cap_f", commodity, s)});
            model.add_row({{{fr[s], 1.0}, {vars.lambda_rev[s], -1.0}}, RowSense::LE, 0.0,
                           idx_name("f_cap_r", commodity, s)});
        }
        for (int b : component_blocks) {
            if (vars.w_virtual[b] < 0) continue;
            fv[b] = model.add_variable(idx_name("f_v", commodity, b), VarKind::Continuous, 0, 1);
            model.add_row({{{fv[b], 1.0}, {vars.w_virtual[b], -1.0}}, RowSense::LE, 0.0,
                           idx_name("f_cap_v", commodity, b)});
        }

        // Flow conservation: -1 at the root, +1 at block k, 0 elsewhere.
        for (int i : component_blocks) {
            LinearRow row;
            row.name = idx_name("f_bal", commodity, i);
            row.sense = RowSense::EQ;
            row.rhs = i == k ? 1.0 : (i == vars.root_block ? -1.0 : 0.0);
            BlockId id = problem.blocks[i].id;
            for (int s : switches_inside) {
                // fwd arc from->to, rev arc to->from; inflow positive.
                if (problem.switches[s].to == id) {
                    row.terms.push_back({ff[s], 1.0});
                    row.terms.push_back({fr[s], -1.0});
                } else if (problem.switches[s].from == id) {
                    row.terms.push_back({ff[s], -1.0});
                    row.terms.push_back({fr[s], 1.0});
                }
            }
            if (i == vars.root_block) {
                for (int b : component_blocks)
                    if (fv[b] >= 0) row.terms.push_back({fv[b], -1.0});
            } else if (fv[i] >= 0) {
                row.terms.push_back({fv[i], 1.0});
            }
            model.add_row(std::move(row));
        }
    }
}

/**
 * Coloring-based leader family with flow verification, over blocks that host
 * at least one eligible provider (other blocks can never color). Includes the
 * per-block leader bounds.
 */
inline void add_leader_constraints(MipModel& model, const PartitionProblem& problem,
                                   VariableMap& vars) {
    using detail::idx_name;
    const int nb = problem.block_count();
    const int ns = problem.switch_count();
    const double kappa = static_cast<double>(problem.kappa);
    const double eta_cap = std::max(1, nb - 1);
    const auto by_block = detail::leaders_by_block(problem, vars);

    vars.has_leader = true;
    for (int b = 0; b < nb; ++b)
        if (!by_block[b].empty()) vars.elig_blocks.push_back(b);

    const int ne = static_cast<int>(vars.elig_blocks.size());
    for (int e = 0; e < ne; ++e) {
        int lb = vars.elig_blocks[e];
        vars.y.emplace_back();
        vars.pi.emplace_back();
        vars.eta.emplace_back();
        vars.xi.emplace_back();
        for (int s = 0; s < ns; ++s)
            vars.y[e].push_back(model.add_variable(idx_name("y", lb, s), VarKind::Continuous, 0, 1));
        vars.y_level.push_back(
            model.add_variable(idx_name("ylev", lb), VarKind::Continuous, 0, 1));
        for (int b = 0; b < nb; ++b)
            vars.pi[e].push_back(model.add_variable(idx_name("pi", lb, b), VarKind::Continuous, 0,
                                                    b == lb ? 0 : 1));
        for (int s = 0; s < ns; ++s)
            vars.eta[e].push_back(model.add_variable(idx_name("eta", lb, s), VarKind::Continuous,
                                                     -eta_cap, eta_cap));
        for (int b = 0; b < nb; ++b)
            vars.xi[e].push_back(b == lb ? -1
                                         : model.add_variable(idx_name("xi", lb, b),
                                                              VarKind::Continuous, 0, 1));
    }

    // Coloring budget: each closed switch carries at most one unit of color.
    for (int s = 0; s < ns; ++s) {
        LinearRow row;
        row.name = idx_name("color_budget", s);
        row.sense = RowSense::LE;
        row.rhs = 0.0;
        for (int e = 0; e < ne; ++e) row.terms.push_back({vars.y[e][s], 1.0});
        row.terms.push_back({vars.z_sw[s], -1.0});
        model.add_row(std::move(row));
    }

    for (int e = 0; e < ne; ++e) {
        int lb = vars.elig_blocks[e];

        // A block's coloring level is covered by its own leaders.
        {
            LinearRow row;
            row.name = idx_name("color_cover", lb);
            row.sense = RowSense::LE;
            row.rhs = 0.0;
            row.terms.push_back({vars.y_level[e], 1.0});
            for (int v : by_block[lb]) row.terms.push_back({v, -1.0});
            model.add_row(std::move(row));
        }

        // Leader participation: a leader-hosting block must color its closed
        // incident switches:  sum z^ldr <= kappa*(y + 1 - z^sw).
        for (SwitchId s : problem.incident_switches(lb)) {
            LinearRow row;
            row.name = idx_name("participation", lb, s);
            row.sense = RowSense::LE;
            row.rhs = kappa;
            for (int v : by_block[lb]) row.terms.push_back({v, 1.0});
            row.terms.push_back({vars.y[e][s], -kappa});
            row.terms.push_back({vars.z_sw[s], kappa});
            model.add_row(std::move(row));
        }

        // Coloring sync within a component: y^l agrees with the hub level on
        // every closed switch whose endpoints the block can reach with closed
        // switches only (pi potentials gate the row across components).
        for (int s = 0; s < ns; ++s) {
            auto [i, j] = problem.switch_endpoints(s);
            model.add_row({{{vars.y[e][s], 1.0},
                            {vars.y_level[e], -1.0},
                            {vars.z_sw[s], 1.0},
                            {vars.pi[e][i], -1.0},
                            {vars.pi[e][j], -1.0}},
                           RowSense::LE, 1.0, idx_name("sync_up", lb, s)});
            model.add_row({{{vars.y_level[e], 1.0},
                            {vars.y[e][s], -1.0},
                            {vars.z_sw[s], 1.0},
                            {vars.pi[e][i], -1.0},
                            {vars.pi[e][j], -1.0}},
                           RowSense::LE, 1.0, idx_name("sync_dn", lb, s)});
        }

        // Potentials: closed switches force equal pi at both endpoints, so
        // pi is zero on the block's own component.
        for (int s = 0; s < ns; ++s) {
            auto [i, j] = problem.switch_endpoints(s);
            model.add_row({{{vars.pi[e][i], 1.0}, {vars.pi[e][j], -1.0}, {vars.z_sw[s], 1.0}},
                           RowSense::LE, 1.0, idx_name("pi_a", lb, s)});
            model.add_row({{{vars.pi[e][j], 1.0}, {vars.pi[e][i], -1.0}, {vars.z_sw[s], 1.0}},
                           RowSense::LE, 1.0, idx_name("pi_b", lb, s)});
        }

        // Verification flow: |B|-1 units leave the block, one unit is
        // absorbed at every other block, really (eta) or virtually (xi).
        for (int s = 0; s < ns; ++s) {
            model.add_row({{{vars.eta[e][s], 1.0}, {vars.z_sw[s], -eta_cap}}, RowSense::LE, 0.0,
                           idx_name("eta_ub", lb, s)});
            model.add_row({{{vars.eta[e][s], 1.0}, {vars.z_sw[s], eta_cap}}, RowSense::GE, 0.0,
                           idx_name("eta_lb", lb, s)});
        }
        for (int b = 0; b < nb; ++b) {
            LinearRow row;
            row.name = idx_name("eta_bal", lb, b);
            row.sense = RowSense::EQ;
            BlockId id = problem.blocks[b].id;
            for (int s = 0; s < ns; ++s) {
                if (problem.switches[s].from == id) row.terms.push_back({vars.eta[e][s], 1.0});
                else if (problem.switches[s].to == id) row.terms.push_back({vars.eta[e][s], -1.0});
            }
            if (b == lb) {
                for (int bb = 0; bb < nb; ++bb)
                    if (vars.xi[e][bb] >= 0) row.terms.push_back({vars.xi[e][bb], 1.0});
                row.rhs = static_cast<double>(nb - 1);
            } else {
                row.terms.push_back({vars.xi[e][b], -1.0});
                row.rhs = -1.0;
            }
            model.add_row(std::move(row));
        }

        // Virtual flow restricts coloring: switches incident to unreachable
        // blocks cannot be colored by this block.
        for (int b = 0; b < nb; ++b) {
            if (b == lb) continue;
            for (SwitchId s : problem.incident_switches(b)) {
                model.add_row({{{vars.y[e][s], 1.0}, {vars.xi[e][b], 1.0}}, RowSense::LE, 1.0,
                               idx_name("virt_restrict", lb, s)});
            }
        }
    }

    // Block activation: an active block hosts leaders itself or touches a
    // colored switch.
    for (int b = 0; b < nb; ++b) {
        LinearRow row;
        row.name = idx_name("activation", b);
        row.sense = RowSense::LE;
        row.rhs = 0.0;
        row.terms.push_back({vars.z_bl[b], 1.0});
        for (int v : by_block[b]) row.terms.push_back({v, -1.0});
        for (SwitchId s : problem.incident_switches(b))
            for (int e = 0; e < ne; ++e) row.terms.push_back({vars.y[e][s], -1.0});
        model.add_row(std::move(row));
    }

    add_block_leader_bounds(model, problem, vars);
}

/**
 * Builds the model for a mode. Core constraints, per-block leader bounds and
 * the objective are always present; the radiality and coloring families are
 * omitted when relaxed (they are then enforced by cutting planes).
 */
inline std::pair<MipModel, VariableMap> build_model(const PartitionProblem& problem,
                                                    BuildMode mode,
                                                    const ObjectiveSpec* objective = nullptr) {
    problem.validate();
    MipModel model;
    VariableMap vars;
    ObjectiveSpec obj = objective ? *objective : ObjectiveSpec::from_problem(problem);
    allocate_core_variables(model, problem, vars, obj);
    add_core_constraints(model, problem, vars);

    if (mode == BuildMode::Full || mode == BuildMode::RelaxLeader) {
        std::vector<int> all(problem.block_count());
        for (int b = 0; b < problem.block_count(); ++b) all[b] = b;
        add_radiality_constraints(model, problem, vars, all);
    }
    if (mode == BuildMode::Full || mode == BuildMode::RelaxRadiality) {
        add_leader_constraints(model, problem, vars);
    } else {
        add_block_leader_bounds(model, problem, vars);
    }
    return {std::move(model), std::move(vars)};
}

}  // namespace netpart

#endif  // NETPART_FORMULATION_HPP
