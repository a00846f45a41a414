/**
 * @file cuts.hpp
 * @brief Violation detection on integral candidates and cut generation:
 *        cycle-elimination cuts and linearized leader-allocation cuts.
 */

#ifndef NETPART_CUTS_HPP
#define NETPART_CUTS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "netpart/formulation.hpp"
#include "netpart/graph.hpp"
#include "netpart/model.hpp"
#include "netpart/problem.hpp"

namespace netpart {

/// One assignment of the binary topology decisions plus continuous dispatch.
struct CandidateSolution {
    SwitchState switch_state;
    std::vector<std::uint8_t> block_active;     // per block index
    std::vector<std::uint8_t> leader_selected;  // per eligible provider
    std::vector<double> gen;                    // per provider
    std::vector<double> flow;                   // per switch

    /// Binary part as a flat vector, used for repeat detection in drivers.
    std::vector<std::uint8_t> binary_signature() const {
        std::vector<std::uint8_t> sig;
        for (int s = 0; s < switch_state.size(); ++s) sig.push_back(switch_state.closed(s));
        sig.insert(sig.end(), block_active.begin(), block_active.end());
        sig.insert(sig.end(), leader_selected.begin(), leader_selected.end());
        return sig;
    }
};

/// Rounds a MIP solution vector into a CandidateSolution.
inline CandidateSolution decode_candidate(const PartitionProblem& problem,
                                          const VariableMap& vars,
                                          const std::vector<double>& x) {
    CandidateSolution c;
    c.switch_state = SwitchState(problem.switch_count());
    for (int s = 0; s < problem.switch_count(); ++s)
        c.switch_state.set(s, x[vars.z_sw[s]] > 0.5);
    for (int b = 0; b < problem.block_count(); ++b)
        c.block_active.push_back(x[vars.z_bl[b]] > 0.5 ? 1 : 0);
    for (int v : vars.z_ldr) c.leader_selected.push_back(x[v] > 0.5 ? 1 : 0);
    for (int v : vars.r_gen) c.gen.push_back(x[v]);
    for (int v : vars.r_flow) c.flow.push_back(x[v]);
    return c;
}

/// Structural fingerprint of a connected component at a candidate, the
/// provenance of a leader cut.
struct ComponentSignature {
    std::vector<SwitchId> external_switches;  // open, incident; sorted
    std::vector<SwitchId> internal_switches;  // closed, inside; sorted
    std::vector<int> blocks;                  // block indices; sorted
    std::vector<int> leaders;                 // eligible-provider indices (L_C); sorted
};

enum class CutKind { Cycle, LeaderLb, LeaderUb };

/// A valid inequality over model variables, tagged with its provenance.
struct Cut {
    CutKind kind = CutKind::Cycle;
    LinearRow row;
    std::vector<SwitchId> cycle;   // cycle cuts
    ComponentSignature signature;  // leader cuts

    /// Canonical key for deduplication across iterations.
    std::string dedup_key() const {
        std::string k;
        switch (kind) {
            case CutKind::Cycle: k = "cyc:"; break;
            case CutKind::LeaderLb: k = "llb:"; break;
            case CutKind::LeaderUb: k = "lub:"; break;
        }
        auto append = [&k](const std::vector<int>& v) {
            for (int x : v) k += std::to_string(x) + ",";
            k += ";";
        };
        if (kind == CutKind::Cycle) {
            append(cycle);
        } else {
            append(signature.external_switches);
            append(signature.internal_switches);
            append(signature.blocks);
            append(signature.leaders);
        }
        return k;
    }
};

/**
 * Indicator Phi(C) for a component signature at a candidate: 1 iff every
 * external switch is open, every internal switch is closed and every block
 * is active.
 */
inline int evaluate_phi(const CandidateSolution& candidate, const ComponentSignature& sig) {
    for (SwitchId s : sig.external_switches)
        if (candidate.switch_state.closed(s)) return 0;
    for (SwitchId s : sig.internal_switches)
        if (!candidate.switch_state.closed(s)) return 0;
    for (int b : sig.blocks)
        if (!candidate.block_active[b]) return 0;
    return 1;
}

/**
 * Cycle-elimination cuts: one per fundamental cycle of the candidate's
 * closed-switch graph,  sum_{(i,j) in C} z^sw_ij <= |C| - 1.  Empty exactly
 * when the candidate is radial.
 */
inline std::vector<Cut> separate_cycles(const PartitionProblem& problem,
                                        const VariableMap& vars,
                                        const CandidateSolution& candidate) {
    std::vector<Cut> out;
    CycleSet cycles = detect_cycles(problem, candidate.switch_state);
    for (const auto& cycle : cycles.cycles) {
        Cut cut;
        cut.kind = CutKind::Cycle;
        cut.cycle = cycle;
        cut.row.sense = RowSense::LE;
        cut.row.rhs = static_cast<double>(cycle.size()) - 1.0;
        cut.row.name = "cycle_cut";
        for (SwitchId s : cycle) cut.row.terms.push_back({vars.z_sw[s], 1.0});
        out.push_back(std::move(cut));
    }
    return out;
}

namespace detail {

/// Signature of a component of the candidate decomposition, with block ids
/// mapped back to block indices.
inline ComponentSignature component_signature(const PartitionProblem& problem,
                                              const Component& comp) {
    ComponentSignature sig;
    sig.external_switches = comp.external_switches;
    sig.internal_switches = comp.internal_switches;
    for (BlockId id : comp.blocks) sig.blocks.push_back(problem.block_index(id));
    sig.leaders = comp.eligible_leaders;
    return sig;
}

}  // namespace detail

/// Linearized lower-bound leader cut for a component signature:
///   sum z^ldr >= sum_ex (1-z^sw) + sum_in z^sw + sum_bl z^bl - n_C + 1.
inline Cut make_leader_lb_cut(const VariableMap& vars, const ComponentSignature& sig) {
    Cut cut;
    cut.kind = CutKind::LeaderLb;
    cut.signature = sig;
    cut.row.sense = RowSense::GE;
    cut.row.name = "leader_lb_cut";
    for (int g : sig.leaders) cut.row.terms.push_back({vars.z_ldr[g], 1.0});
    for (SwitchId s : sig.external_switches) cut.row.terms.push_back({vars.z_sw[s], 1.0});
    for (SwitchId s : sig.internal_switches) cut.row.terms.push_back({vars.z_sw[s], -1.0});
    for (int b : sig.blocks) cut.row.terms.push_back({vars.z_bl[b], -1.0});
    cut.row.rhs = 1.0 - static_cast<double>(sig.internal_switches.size()) -
                  static_cast<double>(sig.blocks.size());
    return cut;
}

/// Linearized upper-bound leader cut:
///   sum z^ldr <= kappa + (|L_C|-kappa) (sum_ex z^sw + sum_in (1-z^sw)
///                                        + sum_bl (1-z^bl)).
inline Cut make_leader_ub_cut(const VariableMap& vars, const ComponentSignature& sig,
                              int kappa) {
    const double slack = static_cast<double>(sig.leaders.size()) - kappa;
    Cut cut;
    cut.kind = CutKind::LeaderUb;
    cut.signature = sig;
    cut.row.sense = RowSense::LE;
    cut.row.name = "leader_ub_cut";
    for (int g : sig.leaders) cut.row.terms.push_back({vars.z_ldr[g], 1.0});
    for (SwitchId s : sig.external_switches) cut.row.terms.push_back({vars.z_sw[s], -slack});
    for (SwitchId s : sig.internal_switches) cut.row.terms.push_back({vars.z_sw[s], slack});
    for (int b : sig.blocks) cut.row.terms.push_back({vars.z_bl[b], slack});
    cut.row.rhs = kappa + slack * (static_cast<double>(sig.internal_switches.size()) +
                                   static_cast<double>(sig.blocks.size()));
    return cut;
}

/**
 * Leader-allocation cuts for every fully active component of the candidate
 * that violates 1 <= sum_{g in L_C} z^ldr <= kappa: the linearized lower
 * bound when no leader is selected, the linearized upper bound when more
 * than kappa are.
 */
inline std::vector<Cut> separate_leader_violations(const PartitionProblem& problem,
                                                   const VariableMap& vars,
                                                   const CandidateSolution& candidate,
                                                   int kappa) {
    std::vector<Cut> out;
    ComponentDecomposition comps = connected_components(problem, candidate.switch_state);
    for (const Component& comp : comps.components) {
        bool active = true;
        for (BlockId id : comp.blocks)
            if (!candidate.block_active[problem.block_index(id)]) active = false;
        if (!active) continue;
        int count = 0;
        for (int g : comp.eligible_leaders) count += candidate.leader_selected[g];
        if (count >= 1 && count <= kappa) continue;
        ComponentSignature sig = detail::component_signature(problem, comp);
        if (count == 0) {
            out.push_back(make_leader_lb_cut(vars, sig));
        } else {
            out.push_back(make_leader_ub_cut(vars, sig, kappa));
        }
    }
    return out;
}

/// Signed violation of a cut row at a candidate vector (positive = violated).
inline double cut_violation(const Cut& cut, const std::vector<double>& x) {
    double lhs = 0.0;
    for (auto [v, c] : cut.row.terms) lhs += c * x[v];
    switch (cut.row.sense) {
        case RowSense::LE: return lhs - cut.row.rhs;
        case RowSense::GE: return cut.row.rhs - lhs;
        case RowSense::EQ: return std::fabs(lhs - cut.row.rhs);
    }
    return 0.0;
}

}  // namespace netpart

#endif  // NETPART_CUTS_HPP
