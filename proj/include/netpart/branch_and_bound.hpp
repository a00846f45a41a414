/**
 * @file branch_and_bound.hpp
 * @brief Branch-and-bound over binary variables with an incumbent callback
 *        for lazy cuts, warm-starting node LPs from a shared simplex state.
 */

#ifndef NETPART_BRANCH_AND_BOUND_HPP
#define NETPART_BRANCH_AND_BOUND_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "netpart/model.hpp"
#include "netpart/simplex.hpp"

namespace netpart {

/**
 * Incumbent handler. Receives a candidate with binaries rounded to exact 0/1
 * and either accepts it (empty result) or returns constraint rows the
 * candidate violates. Returned rows are added globally and the node is
 * re-solved.
 */
using IncumbentCallback = std::function<std::vector<LinearRow>(const std::vector<double>&)>;

struct MipOptions {
    /// Observer invoked with the global lower bound each time a node is
    /// processed (used by tests to check bound monotonicity).
    std::function<void(double)> on_node;
    long node_limit = 200000;
};

/**
 * Solves `model` to optimality by best-bound branch-and-bound with
 * depth-first plunging. Branching: most-fractional binary, ties by lowest
 * variable id. Every integral node is offered to `callback` before being
 * accepted as incumbent.
 *
 * Throws ContractViolation if the callback returns a row the triggering
 * candidate does not violate.
 */
inline MipSolution solve_mip(const MipModel& model, const IncumbentCallback& callback = {},
                             const MipOptions& options = {}) {
    std::vector<int> binaries;
    for (int j = 0; j < model.variable_count(); ++j)
        if (model.variables[j].kind == VarKind::Binary) binaries.push_back(j);

    // Working copy: node bounds are applied onto it, callback cuts appended.
    MipModel work = model;
    SimplexSolver solver;
    solver.load(work);

    // 0 = fixed to 0, 1 = fixed to 1, 2 = free.
    using BoundMask = std::vector<std::uint8_t>;
    struct Node {
        double bound;
        long id;
        BoundMask mask;
    };
    auto cmp = [](const Node& a, const Node& b) {
        if (a.bound != b.bound) return a.bound > b.bound;
        return a.id > b.id;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> open(cmp);

    const double inf = std::numeric_limits<double>::infinity();
    MipSolution best;
    double incumbent = inf;
    long next_id = 0;
    long nodes = 0;
    int cuts_added = 0;

    auto apply_mask = [&](const BoundMask& mask) {
        for (std::size_t k = 0; k < binaries.size(); ++k) {
            int j = binaries[k];
            double lo = model.variables[j].lb, hi = model.variables[j].ub;
            if (mask[k] == 0) hi = 0.0;
            else if (mask[k] == 1) lo = 1.0;
            solver.set_variable_bounds(j, lo, hi);
        }
    };

    auto violation = [&](const LinearRow& row, const std::vector<double>& x) {
        double lhs = 0.0;
        for (auto [v, c] : row.terms) lhs += c * x[v];
        switch (row.sense) {
            case RowSense::LE: return lhs - row.rhs;
            case RowSense::GE: return row.rhs - lhs;
            case RowSense::EQ: return std::fabs(lhs - row.rhs);
        }
        return 0.0;
    };

    Node root{-inf, next_id++, BoundMask(binaries.size(), 2)};
    open.push(root);

    while (!open.empty()) {
        Node node = open.top();
        open.pop();
        if (node.bound >= incumbent - 1e-9) continue;  // bounds only tighten

        bool plunging = true;
        while (plunging) {
            plunging = false;
            ++nodes;
            if (nodes > options.node_limit)
                throw std::runtime_error("branch-and-bound node limit exceeded");

            apply_mask(node.mask);
            LpSolution lp = solver.solve();
            if (lp.status == LpStatus::SolverFailure) {
                // Rebuild cold once; a persistent failure is a real error.
                solver.load(work);
                apply_mask(node.mask);
                lp = solver.solve();
                if (lp.status == LpStatus::SolverFailure)
                    throw std::runtime_error("LP solver failure inside branch-and-bound");
            }
            if (lp.status == LpStatus::Unbounded)
                throw std::runtime_error("unbounded LP relaxation in branch-and-bound");

            double global_lb = lp.status == LpStatus::Infeasible ? inf : lp.objective;
            if (!open.empty()) global_lb = std::min(global_lb, open.top().bound);
            if (incumbent < inf) global_lb = std::min(global_lb, incumbent);
            if (options.on_node) options.on_node(global_lb);

            if (lp.status == LpStatus::Infeasible) break;
            if (lp.objective >= incumbent - 1e-9) break;  // fathomed by bound

            // Most fractional binary; ties by lowest variable id.
            int branch_var = -1;
            double best_frac = Tolerances::integrality;
            for (int j : binaries) {
                double f = lp.x[j] - std::floor(lp.x[j]);
                double dist = std::min(f, 1.0 - f);
                if (dist > best_frac + 1e-12) {
                    best_frac = dist;
                    branch_var = j;
                }
            }

            if (branch_var < 0) {
                // Integral candidate: round and consult the callback.
                std::vector<double> x = lp.x;
                for (int j : binaries) x[j] = std::round(x[j]);
                std::vector<LinearRow> cuts = callback ? callback(x) : std::vector<LinearRow>{};
                if (!cuts.empty()) {
                    for (const LinearRow& cut : cuts) {
                        if (violation(cut, x) <= Tolerances::feasibility)
                            throw ContractViolation(
                                "callback returned a cut the candidate does not violate" +
                                (cut.name.empty() ? std::string() : ": " + cut.name));
                        work.add_row(cut);
                        solver.add_row(cut);
                        ++cuts_added;
                    }
                    plunging = true;  // re-solve this node with the new rows
                    --nodes;          // re-solve, not a new node
                    continue;
                }
                double obj = work.objective_value(x);
                if (obj < incumbent - 1e-9) {
                    incumbent = obj;
                    best.status = MipStatus::Optimal;
                    best.x = x;
                    best.objective = obj;
                }
                break;
            }

            // Branch; plunge into the child suggested by the fractional value.
            double frac = lp.x[branch_var] - std::floor(lp.x[branch_var]);
            int k = -1;
            for (std::size_t i = 0; i < binaries.size(); ++i)
                if (binaries[i] == branch_var) k = static_cast<int>(i);
            Node up{lp.objective, next_id++, node.mask};
            up.mask[k] = 1;
            Node down{lp.objective, next_id++, node.mask};
            down.mask[k] = 0;
            if (frac >= 0.5) {
                open.push(down);
                node = up;
            } else {
                open.push(up);
                node = down;
            }
            plunging = true;
        }
    }

    best.node_count = nodes;
    best.callback_cut_count = cuts_added;
    if (best.status != MipStatus::Optimal) best.status = MipStatus::Infeasible;
    return best;
}

}  // namespace netpart

#endif  // NETPART_BRANCH_AND_BOUND_HPP
