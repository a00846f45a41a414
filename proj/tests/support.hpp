// Shared test fixtures and independent oracles. Everything here must stay
// independent of the implementation paths it is used to check: components and
// cycles via plain DFS, LPs via basic-solution enumeration, MIPs via
// exhaustive search.

#ifndef NETPART_TESTS_SUPPORT_HPP
#define NETPART_TESTS_SUPPORT_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "netpart/model.hpp"
#include "netpart/problem.hpp"

namespace testsupport {

using netpart::BlockId;
using netpart::PartitionProblem;
using netpart::SwitchState;

/// Problem with `n` blocks (ids 0..n-1) joined by the given switch pairs.
/// Every block gets one consumer (demand 1) and block 0 a generous
/// leader-eligible provider, so most states are dispatch-feasible.
inline PartitionProblem simple_problem(int n, const std::vector<std::pair<int, int>>& edges,
                                       int kappa = 1) {
    PartitionProblem p;
    for (int i = 0; i < n; ++i) {
        netpart::Block b;
        b.id = i;
        b.consumers.push_back({"m" + std::to_string(i), 1.0});
        if (i == 0) b.providers.push_back({"g0", 0.0, 100.0, 1.0, true});
        p.blocks.push_back(b);
    }
    for (auto [a, b] : edges) p.switches.push_back({a, b, 50.0});
    p.kappa = kappa;
    p.validate();
    return p;
}

/// DFS component labeling, deliberately different from union-find.
inline std::vector<int> dfs_components(const PartitionProblem& p, const SwitchState& st) {
    int n = p.block_count();
    std::vector<std::vector<int>> adj(n);
    for (int s = 0; s < p.switch_count(); ++s) {
        if (!st.closed(s)) continue;
        auto [a, b] = p.switch_endpoints(s);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> label(n, -1);
    int next = 0;
    for (int start = 0; start < n; ++start) {
        if (label[start] >= 0) continue;
        std::vector<int> stack{start};
        label[start] = next;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (label[v] < 0) {
                    label[v] = next;
                    stack.push_back(v);
                }
        }
        ++next;
    }
    return label;
}

/// DFS back-edge acyclicity check on the closed-switch multigraph.
inline bool dfs_acyclic(const PartitionProblem& p, const SwitchState& st) {
    int n = p.block_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, switch id)
    for (int s = 0; s < p.switch_count(); ++s) {
        if (!st.closed(s)) continue;
        auto [a, b] = p.switch_endpoints(s);
        adj[a].push_back({b, s});
        adj[b].push_back({a, s});
    }
    std::vector<int> seen(n, 0);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        // iterative DFS remembering the switch used to enter each node
        std::vector<std::pair<int, int>> stack{{start, -1}};
        seen[start] = 1;
        while (!stack.empty()) {
            auto [u, in_edge] = stack.back();
            stack.pop_back();
            for (auto [v, s] : adj[u]) {
                if (s == in_edge) continue;  // don't reuse the entering edge
                if (seen[v]) return false;   // back edge: cycle
                seen[v] = 1;
                stack.push_back({v, s});
            }
        }
    }
    return true;
}

/// Random connected problem on n blocks: a random spanning tree plus
/// `extra` additional switches. Deterministic in `seed`.
inline PartitionProblem random_problem(int n, int extra, unsigned seed, int kappa = 1) {
    std::mt19937 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.push_back({pick(rng), v});
    }
    std::uniform_int_distribution<int> any(0, n - 1);
    for (int e = 0; e < extra; ++e) {
        int a = any(rng), b = any(rng);
        if (a == b) {
            --e;
            continue;
        }
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return simple_problem(n, edges, kappa);
}

inline SwitchState random_state(const PartitionProblem& p, std::mt19937& rng) {
    SwitchState st(p.switch_count());
    std::bernoulli_distribution coin(0.5);
    for (int s = 0; s < p.switch_count(); ++s) st.set(s, coin(rng));
    return st;
}

/**
 * Exhaustive LP oracle: enumerates basic solutions of  A x + s = b  with all
 * nonbasics at their lower bound, and returns the best feasible objective.
 * Valid for models whose optimum has every structural upper bound slack
 * (the generators below construct such models on purpose).
 */
inline std::optional<double> vertex_enumeration_optimum(const netpart::MipModel& model) {
    const int n = model.variable_count();
    const int m = model.row_count();
    const int total = n + m;

    // Dense column matrix of [A | I_slack] and slack bounds by sense.
    std::vector<std::vector<double>> col(total, std::vector<double>(m, 0.0));
    std::vector<double> lo(total), hi(total), cost(total, 0.0), rhs(m);
    for (int j = 0; j < n; ++j) {
        lo[j] = model.variables[j].lb;
        hi[j] = model.variables[j].ub;
        cost[j] = model.variables[j].obj;
    }
    for (int i = 0; i < m; ++i) {
        const auto& row = model.rows[i];
        rhs[i] = row.rhs;
        for (auto [v, c] : row.terms) col[v][i] += c;
        col[n + i][i] = 1.0;
        switch (row.sense) {
            case netpart::RowSense::LE: lo[n + i] = 0; hi[n + i] = 1e30; break;
            case netpart::RowSense::GE: lo[n + i] = -1e30; hi[n + i] = 0; break;
            case netpart::RowSense::EQ: lo[n + i] = 0; hi[n + i] = 0; break;
        }
    }

    std::optional<double> best;
    std::vector<int> basis(m);
    // Enumerate all m-subsets of columns as candidate bases.
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    auto advance = [&]() {
        int i = m - 1;
        while (i >= 0 && idx[i] == total - m + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int k = i + 1; k < m; ++k) idx[k] = idx[k - 1] + 1;
        return true;
    };
    do {
        // Nonbasics at their (finite) lower bound; skip bases that would need
        // a nonbasic at an infinite bound.
        std::vector<char> basic(total, 0);
        for (int i = 0; i < m; ++i) basic[idx[i]] = 1;
        bool ok = true;
        std::vector<double> resid = rhs;
        double base_cost = 0.0;
        for (int j = 0; j < total && ok; ++j) {
            if (basic[j]) continue;
            if (lo[j] < -1e29) ok = false;
            for (int i = 0; i < m; ++i) resid[i] -= col[j][i] * lo[j];
            base_cost += cost[j] * lo[j];
        }
        if (!ok) continue;

        // Solve B xB = resid by Gaussian elimination.
        std::vector<std::vector<double>> a(m, std::vector<double>(m + 1));
        for (int i = 0; i < m; ++i) {
            for (int k = 0; k < m; ++k) a[i][k] = col[idx[k]][i];
            a[i][m] = resid[i];
        }
        for (int c = 0; c < m && ok; ++c) {
            int piv = -1;
            double bestp = 1e-9;
            for (int r = c; r < m; ++r)
                if (std::fabs(a[r][c]) > bestp) {
                    bestp = std::fabs(a[r][c]);
                    piv = r;
                }
            if (piv < 0) {
                ok = false;
                break;
            }
            std::swap(a[piv], a[c]);
            for (int r = 0; r < m; ++r) {
                if (r == c) continue;
                double f = a[r][c] / a[c][c];
                if (f == 0.0) continue;
                for (int k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
            }
        }
        if (!ok) continue;
        double obj = base_cost + model.objective_offset;
        for (int k = 0; k < m && ok; ++k) {
            double v = a[k][m] / a[k][k];
            if (v < lo[idx[k]] - 1e-7 || v > hi[idx[k]] + 1e-7) ok = false;
            obj += cost[idx[k]] * v;
        }
        if (!ok) continue;
        if (!best || obj < *best) best = obj;
    } while (advance());
    return best;
}

}  // namespace testsupport

#endif  // NETPART_TESTS_SUPPORT_HPP
