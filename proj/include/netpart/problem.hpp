/**
 * @file problem.hpp
 * @brief Immutable network instance: blocks, switches, providers/consumers,
 *        capacities, demands and partitioning parameters.
 */

#ifndef NETPART_PROBLEM_HPP
#define NETPART_PROBLEM_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace netpart {

using BlockId = int;
using SwitchId = int;

/// Resource provider attached to a block. Generation is dispatchable in
/// [cmin, cmax] while the containing block is active, zero otherwise.
struct Provider {
    std::string name;
    double cmin = 0.0;
    double cmax = 0.0;
    double cost = 1.0;
    bool leader_eligible = false;
};

/// Resource consumer with a fixed demand, served only when its block is active.
struct Consumer {
    std::string name;
    double demand = 0.0;
};

/// Smallest sub-network that stays internally connected when every
/// controllable edge is open. Vertex unit of the partitioning graph.
struct Block {
    BlockId id = 0;
    std::vector<Provider> providers;
    std::vector<Consumer> consumers;
    int intermediaries = 0;  // routing-only nodes, no data attached
};

/// Controllable block-to-block edge. Parallel switches between the same
/// block pair are allowed; self-loops are not.
struct Switch {
    BlockId from = 0;
    BlockId to = 0;
    double rmax = 1.0;  // flow capacity when closed, must be > 0
};

/// Flat handle for one provider: (block index, provider index within block).
struct ProviderRef {
    int block = 0;  // index into PartitionProblem::blocks
    int provider = 0;
};

/**
 * Immutable partitioning instance.
 *
 * Blocks are referenced externally by BlockId and internally by their index
 * in `blocks`. Switches are referenced by their index in `switches`.
 */
class PartitionProblem {
public:
    std::vector<Block> blocks;
    std::vector<Switch> switches;
    int kappa = 1;       // max leaders per connected component
    double nu = 0.9;     // load-shed weight, in [0,1]
    double gamma = 1.0;  // block priority scale

    /// Validates all instance invariants; throws std::invalid_argument with a
    /// descriptive message on the first violation.
    void validate() const {
        if (blocks.empty()) throw std::invalid_argument("problem has no blocks");
        std::map<BlockId, int> seen;
        for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
            const Block& b = blocks[i];
            if (seen.count(b.id))
                throw std::invalid_argument("duplicate block id " + std::to_string(b.id));
            seen[b.id] = i;
            if (b.intermediaries < 0)
                throw std::invalid_argument("block " + std::to_string(b.id) +
                                            ": negative intermediary count");
            for (const Provider& p : b.providers) {
                if (p.cmin > p.cmax)
                    throw std::invalid_argument("block " + std::to_string(b.id) +
                                                ": provider with cmin > cmax");
            }
            for (const Consumer& c : b.consumers) {
                if (c.demand < 0.0)
                    throw std::invalid_argument("block " + std::to_string(b.id) +
                                                ": negative demand");
            }
        }
        for (int s = 0; s < static_cast<int>(switches.size()); ++s) {
            const Switch& sw = switches[s];
            if (!seen.count(sw.from) || !seen.count(sw.to))
                throw std::invalid_argument("switch " + std::to_string(s) +
                                            " references unknown block");
            if (sw.from == sw.to)
                throw std::invalid_argument("switch " + std::to_string(s) +
                                            " is a self-loop");
            if (!(sw.rmax > 0.0))
                throw std::invalid_argument("switch " + std::to_string(s) +
                                            " has non-positive rmax");
        }
        if (kappa < 1) throw std::invalid_argument("kappa must be >= 1");
        if (nu < 0.0 || nu > 1.0) throw std::invalid_argument("nu must be in [0,1]");
        if (gamma <= 0.0) throw std::invalid_argument("gamma must be > 0");
    }

    int block_count() const { return static_cast<int>(blocks.size()); }
    int switch_count() const { return static_cast<int>(switches.size()); }

    /// Index of the block with the given external id; throws if unknown.
    int block_index(BlockId id) const {
        for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
            if (blocks[i].id == id) return i;
        throw std::invalid_argument("unknown block id " + std::to_string(id));
    }

    /// Endpoint block indices of switch s.
    std::pair<int, int> switch_endpoints(SwitchId s) const {
        const Switch& sw = switches.at(s);
        return {block_index(sw.from), block_index(sw.to)};
    }

    /// All providers in a flat, deterministic order (by block, then position).
    std::vector<ProviderRef> all_providers() const {
        std::vector<ProviderRef> out;
        for (int b = 0; b < block_count(); ++b)
            for (int p = 0; p < static_cast<int>(blocks[b].providers.size()); ++p)
                out.push_back({b, p});
        return out;
    }

    /// Leader-eligible providers in flat order. z^ldr variables are indexed
    /// by position in this list.
    std::vector<ProviderRef> eligible_providers() const {
        std::vector<ProviderRef> out;
        for (int b = 0; b < block_count(); ++b)
            for (int p = 0; p < static_cast<int>(blocks[b].providers.size()); ++p)
                if (blocks[b].providers[p].leader_eligible) out.push_back({b, p});
        return out;
    }

    const Provider& provider(const ProviderRef& r) const {
        return blocks.at(r.block).providers.at(r.provider);
    }

    /// Total demand of a block (by block index).
    double block_demand(int block_idx) const {
        double d = 0.0;
        for (const Consumer& c : blocks.at(block_idx).consumers) d += c.demand;
        return d;
    }

    /// Shedding priority alpha_l = gamma * |consumer set of l|.
    double block_priority(int block_idx) const {
        return gamma * static_cast<double>(blocks.at(block_idx).consumers.size());
    }

    double total_demand() const {
        double d = 0.0;
        for (int b = 0; b < block_count(); ++b) d += block_demand(b);
        return d;
    }

    /// Switch indices incident to a block (by block index), ascending.
    std::vector<SwitchId> incident_switches(int block_idx) const {
        std::vector<SwitchId> out;
        BlockId id = blocks.at(block_idx).id;
        for (int s = 0; s < switch_count(); ++s)
            if (switches[s].from == id || switches[s].to == id) out.push_back(s);
        return out;
    }
};

/**
 * Open/closed assignment for every switch of a problem (vector z^sw).
 */
class SwitchState {
public:
    SwitchState() = default;
    explicit SwitchState(int n) : closed_(n, 0) {}
    SwitchState(std::initializer_list<int> bits) {
        for (int b : bits) closed_.push_back(b != 0);
    }

    int size() const { return static_cast<int>(closed_.size()); }
    bool closed(SwitchId s) const { return closed_.at(s) != 0; }
    void set(SwitchId s, bool is_closed) { closed_.at(s) = is_closed ? 1 : 0; }

    int closed_count() const {
        int n = 0;
        for (auto b : closed_) n += b;
        return n;
    }

    bool operator==(const SwitchState& o) const { return closed_ == o.closed_; }

private:
    std::vector<std::uint8_t> closed_;
};

/// Throws unless `state` is sized for `problem`.
inline void check_state(const PartitionProblem& problem, const SwitchState& state) {
    if (state.size() != problem.switch_count())
        throw std::invalid_argument("switch state has " + std::to_string(state.size()) +
                                    " entries, problem has " +
                                    std::to_string(problem.switch_count()) + " switches");
}

}  // namespace netpart

#endif  // NETPART_PROBLEM_HPP
