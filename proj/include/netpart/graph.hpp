/**
 * @file graph.hpp
 * @brief Pure block-graph queries shared by constraint building and cut
 *        separation: connected components, fundamental cycles, radiality.
 */

#ifndef NETPART_GRAPH_HPP
#define NETPART_GRAPH_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "netpart/problem.hpp"

namespace netpart {

/// One maximal set of blocks mutually linked by closed switches.
struct Component {
    std::vector<BlockId> blocks;                // sorted ascending
    std::vector<SwitchId> internal_switches;    // closed, both endpoints inside
    std::vector<SwitchId> external_switches;    // open, at least one endpoint inside
    std::vector<int> eligible_leaders;          // indices into eligible_providers()
};

/// Partition of all blocks into components under a switch state.
struct ComponentDecomposition {
    std::vector<Component> components;  // sorted by smallest member BlockId

    /// Component index containing a block (by block index order of the
    /// decomposition input); -1 if out of range.
    int component_of(BlockId id) const {
        for (int c = 0; c < static_cast<int>(components.size()); ++c)
            for (BlockId b : components[c].blocks)
                if (b == id) return c;
        return -1;
    }
};

/// Switch-id lists, one per fundamental cycle of the closed-switch graph.
struct CycleSet {
    std::vector<std::vector<SwitchId>> cycles;

    bool empty() const { return cycles.empty(); }
    int size() const { return static_cast<int>(cycles.size()); }
};

namespace detail {

/// Union-find over block indices.
class DisjointSet {
public:
    explicit DisjointSet(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep lowest index as representative
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace detail

/**
 * Decomposes the block graph under `state` into connected components.
 *
 * Components are sorted by their smallest member BlockId; blocks and switch
 * lists inside each component are sorted ascending, so the result is
 * independent of switch iteration order.
 */
inline ComponentDecomposition connected_components(const PartitionProblem& problem,
                                                   const SwitchState& state) {
    check_state(problem, state);
    const int n = problem.block_count();
    detail::DisjointSet dsu(n);
    for (SwitchId s = 0; s < problem.switch_count(); ++s) {
        if (!state.closed(s)) continue;
        auto [a, b] = problem.switch_endpoints(s);
        dsu.unite(a, b);
    }

    // Group block indices by representative.
    std::vector<std::vector<int>> groups(n);
    for (int b = 0; b < n; ++b) groups[dsu.find(b)].push_back(b);

    // Order components by smallest member BlockId.
    std::vector<std::pair<BlockId, int>> order;
    for (int r = 0; r < n; ++r) {
        if (groups[r].empty()) continue;
        BlockId lowest = problem.blocks[groups[r][0]].id;
        for (int b : groups[r]) lowest = std::min(lowest, problem.blocks[b].id);
        order.push_back({lowest, r});
    }
    std::sort(order.begin(), order.end());

    const auto eligible = problem.eligible_providers();
    ComponentDecomposition out;
    for (auto [lowest, r] : order) {
        Component comp;
        for (int b : groups[r]) comp.blocks.push_back(problem.blocks[b].id);
        std::sort(comp.blocks.begin(), comp.blocks.end());
        for (SwitchId s = 0; s < problem.switch_count(); ++s) {
            auto [a, b] = problem.switch_endpoints(s);
            bool a_in = dsu.find(a) == r;
            bool b_in = dsu.find(b) == r;
            if (state.closed(s)) {
                if (a_in && b_in) comp.internal_switches.push_back(s);
            } else if (a_in || b_in) {
                comp.external_switches.push_back(s);
            }
        }
        for (int g = 0; g < static_cast<int>(eligible.size()); ++g)
            if (dsu.find(eligible[g].block) == r) comp.eligible_leaders.push_back(g);
        out.components.push_back(std::move(comp));
    }
    return out;
}

/**
 * Fundamental cycle basis of the closed-switch graph.
 *
 * Builds a spanning forest over closed switches (forest roots: lowest BlockId
 * per component; tree switches taken in ascending switch-id order). Every
 * remaining closed switch is a chord and contributes one cycle consisting of
 * the chord plus the tree path between its endpoints. The number of cycles
 * equals closed switches - blocks + components.
 */
inline CycleSet detect_cycles(const PartitionProblem& problem, const SwitchState& state) {
    check_state(problem, state);
    const int n = problem.block_count();

    // Spanning forest via union-find, scanning switches in ascending id order.
    detail::DisjointSet dsu(n);
    std::vector<std::vector<std::pair<int, SwitchId>>> tree(n);  // adjacency: (block, switch)
    std::vector<SwitchId> chords;
    for (SwitchId s = 0; s < problem.switch_count(); ++s) {
        if (!state.closed(s)) continue;
        auto [a, b] = problem.switch_endpoints(s);
        if (dsu.unite(a, b)) {
            tree[a].push_back({b, s});
            tree[b].push_back({a, s});
        } else {
            chords.push_back(s);
        }
    }

    CycleSet out;
    for (SwitchId chord : chords) {
        auto [src, dst] = problem.switch_endpoints(chord);
        // BFS through tree edges from src to dst.
        std::vector<int> prev_block(n, -1);
        std::vector<SwitchId> prev_switch(n, -1);
        std::vector<int> queue{src};
        prev_block[src] = src;
        for (std::size_t q = 0; q < queue.size() && prev_block[dst] < 0; ++q) {
            int u = queue[q];
            for (auto [v, s] : tree[u]) {
                if (prev_block[v] >= 0) continue;
                prev_block[v] = u;
                prev_switch[v] = s;
                queue.push_back(v);
            }
        }
        std::vector<SwitchId> cycle{chord};
        for (int v = dst; v != src; v = prev_block[v]) cycle.push_back(prev_switch[v]);
        std::sort(cycle.begin(), cycle.end());
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

/// True iff the closed-switch graph is a forest (every component a tree).
inline bool is_radial(const PartitionProblem& problem, const SwitchState& state) {
    return detect_cycles(problem, state).empty();
}

}  // namespace netpart

#endif  // NETPART_GRAPH_HPP
