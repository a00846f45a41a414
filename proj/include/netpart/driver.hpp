/**
 * @file driver.hpp
 * @brief Iterative cutting-plane driver: solve the (relaxed) model, check
 *        the integral candidate, append cuts for the violations found,
 *        repeat until feasible. Restart and callback realizations.
 */

#ifndef NETPART_DRIVER_HPP
#define NETPART_DRIVER_HPP

#include <chrono>
#include <set>
#include <string>
#include <vector>

#include "netpart/branch_and_bound.hpp"
#include "netpart/cuts.hpp"
#include "netpart/formulation.hpp"
#include "netpart/graph.hpp"

namespace netpart {

enum class SolveMode { Full, CpRadial, CpGf, CpBoth };
enum class DriverKind { Restart, Callback };

inline const char* to_string(SolveMode m) {
    switch (m) {
        case SolveMode::Full: return "full";
        case SolveMode::CpRadial: return "cp-radial";
        case SolveMode::CpGf: return "cp-gf";
        case SolveMode::CpBoth: return "cp-both";
    }
    return "?";
}
inline const char* to_string(DriverKind d) {
    return d == DriverKind::Restart ? "restart" : "callback";
}

enum class SolveStatus { Optimal, Infeasible, InternalError };

/// Result of one solve: objective, final topology, iteration and cut
/// statistics, timing.
struct SolveReport {
    SolveMode mode = SolveMode::Full;
    DriverKind driver = DriverKind::Restart;
    SolveStatus status = SolveStatus::Infeasible;
    double objective = 0.0;

    CandidateSolution solution;
    ComponentDecomposition topology;
    double served_demand = 0.0;
    double shed_demand = 0.0;
    int energized_blocks = 0;

    int iterations = 0;  // cut-adding rounds (tau)
    int cycle_cut_count = 0;
    int leader_cut_count = 0;  // lb + ub
    std::vector<Cut> cuts;     // every cut added, in order
    std::vector<std::vector<std::uint8_t>> candidate_log;
    bool candidate_repeated = false;

    long node_count = 0;
    double wall_ms = 0.0;
};

namespace detail {

/// Internal: unwinds the callback driver when the safety cap trips.
struct IterationCapExceeded {};

inline BuildMode build_mode_for(SolveMode mode) {
    switch (mode) {
        case SolveMode::Full: return BuildMode::Full;
        case SolveMode::CpRadial: return BuildMode::RelaxRadiality;
        case SolveMode::CpGf: return BuildMode::RelaxLeader;
        case SolveMode::CpBoth: return BuildMode::RelaxBoth;
    }
    return BuildMode::Full;
}

/// Runs the active separators on a candidate, filters duplicates, verifies
/// the separator contract, and appends the survivors to the report.
inline std::vector<LinearRow> collect_cuts(const PartitionProblem& problem,
                                           const VariableMap& vars, SolveMode mode,
                                           const CandidateSolution& candidate,
                                           const std::vector<double>& x,
                                           std::set<std::string>& seen, SolveReport& report) {
    std::vector<Cut> found;
    if (mode == SolveMode::CpRadial || mode == SolveMode::CpBoth) {
        for (Cut& c : separate_cycles(problem, vars, candidate)) found.push_back(std::move(c));
    }
    if (mode == SolveMode::CpGf || mode == SolveMode::CpBoth) {
        for (Cut& c : separate_leader_violations(problem, vars, candidate, problem.kappa))
            found.push_back(std::move(c));
    }
    std::vector<LinearRow> rows;
    bool had_violation = !found.empty();
    for (Cut& cut : found) {
        if (cut_violation(cut, x) <= Tolerances::feasibility)
            throw ContractViolation("separator produced a cut not violated by its candidate");
        if (!seen.insert(cut.dedup_key()).second) continue;
        if (cut.kind == CutKind::Cycle) ++report.cycle_cut_count;
        else ++report.leader_cut_count;
        rows.push_back(cut.row);
        report.cuts.push_back(std::move(cut));
    }
    if (had_violation && rows.empty())
        throw ContractViolation("candidate violates constraints but every cut was a duplicate");
    return rows;
}

inline void finalize_topology(const PartitionProblem& problem, SolveReport& report) {
    report.topology = connected_components(problem, report.solution.switch_state);
    report.served_demand = 0.0;
    report.shed_demand = 0.0;
    report.energized_blocks = 0;
    for (int b = 0; b < problem.block_count(); ++b) {
        double d = problem.block_demand(b);
        if (report.solution.block_active[b]) {
            report.served_demand += d;
            ++report.energized_blocks;
        } else {
            report.shed_demand += d;
        }
    }
}

}  // namespace detail

/**
 * Solves a partitioning instance in the given mode.
 *
 * full       monolithic model, no separators;
 * cp-radial  radiality relaxed, cycle cuts;
 * cp-gf      coloring family relaxed, leader cuts;
 * cp-both    both relaxed, both separators.
 *
 * The restart driver re-solves the model from scratch after each round of
 * cuts (Algorithm 1 literally); the callback driver injects cuts at integral
 * nodes inside a single branch-and-bound tree. Both return the same
 * objective. Iterations are capped at 2^|switches| rounds; exceeding the cap
 * yields InternalError (unreachable if the cuts are valid).
 */
inline SolveReport solve_with_cuts(const PartitionProblem& problem, SolveMode mode,
                                   DriverKind driver,
                                   const ObjectiveSpec* objective = nullptr) {
    auto t0 = std::chrono::steady_clock::now();
    SolveReport report;
    report.mode = mode;
    report.driver = driver;

    auto [model, vars] = build_model(problem, detail::build_mode_for(mode), objective);
    std::set<std::string> seen_cuts;
    std::set<std::vector<std::uint8_t>> seen_candidates;

    auto log_candidate = [&](const CandidateSolution& c) {
        auto sig = c.binary_signature();
        if (!seen_candidates.insert(sig).second) report.candidate_repeated = true;
        report.candidate_log.push_back(std::move(sig));
    };

    const long long iteration_cap =
        problem.switch_count() >= 62 ? (1LL << 62) : (1LL << problem.switch_count());

    MipSolution mip;
    if (driver == DriverKind::Restart) {
        while (true) {
            mip = solve_mip(model);
            report.node_count += mip.node_count;
            if (mip.status == MipStatus::Infeasible) {
                report.status = SolveStatus::Infeasible;
                report.wall_ms = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count();
                return report;
            }
            CandidateSolution candidate = decode_candidate(problem, vars, mip.x);
            log_candidate(candidate);
            std::vector<LinearRow> rows =
                detail::collect_cuts(problem, vars, mode, candidate, mip.x, seen_cuts, report);
            if (rows.empty()) {
                report.solution = std::move(candidate);
                break;
            }
            for (LinearRow& r : rows) model.add_row(std::move(r));
            ++report.iterations;
            if (report.iterations > iteration_cap) {
                report.status = SolveStatus::InternalError;
                return report;
            }
        }
    } else {
        IncumbentCallback cb = [&](const std::vector<double>& x) {
            CandidateSolution candidate = decode_candidate(problem, vars, x);
            log_candidate(candidate);
            std::vector<LinearRow> rows =
                detail::collect_cuts(problem, vars, mode, candidate, x, seen_cuts, report);
            if (!rows.empty()) {
                ++report.iterations;
                if (report.iterations > iteration_cap) throw detail::IterationCapExceeded{};
            }
            return rows;
        };
        try {
            mip = solve_mip(model, cb);
        } catch (const detail::IterationCapExceeded&) {
            report.status = SolveStatus::InternalError;
            return report;
        }
        report.node_count = mip.node_count;
        if (mip.status == MipStatus::Infeasible) {
            report.status = SolveStatus::Infeasible;
            report.wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            return report;
        }
        report.solution = decode_candidate(problem, vars, mip.x);
    }

    report.status = SolveStatus::Optimal;
    report.objective = model.objective_value(mip.x);
    detail::finalize_topology(problem, report);
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace netpart

#endif  // NETPART_DRIVER_HPP
