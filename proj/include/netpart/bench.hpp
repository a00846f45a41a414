/**
 * @file bench.hpp
 * @brief Scenario sampling under box demand uncertainty and the four-mode
 *        benchmark harness with cut statistics and timing aggregates.
 */

#ifndef NETPART_BENCH_HPP
#define NETPART_BENCH_HPP

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>
#include <vector>

#include "netpart/driver.hpp"
#include "netpart/network_io.hpp"
#include "netpart/problem.hpp"

namespace netpart {

/// Sampling protocol: `count` demand realizations drawn uniformly from the
/// box [(1-rho) D, (1+rho) D] around nominal demands, reproducible from seed.
struct ScenarioBatch {
    int count = 250;
    double rho = 0.2;
    unsigned seed = 42;
};

/// The demand realization for one scenario index.
inline PartitionProblem sample_scenario(const PartitionProblem& base, const ScenarioBatch& batch,
                                        int index) {
    if (batch.rho < 0.0 || batch.rho > 1.0)
        throw std::invalid_argument("scenario rho must be in [0,1]");
    std::seed_seq seq{batch.seed, static_cast<unsigned>(index)};
    std::mt19937 rng(seq);
    PartitionProblem p = base;
    for (Block& b : p.blocks)
        for (Consumer& c : b.consumers) {
            std::uniform_real_distribution<double> dist((1.0 - batch.rho) * c.demand,
                                                        (1.0 + batch.rho) * c.demand);
            c.demand = std::max(0.0, dist(rng));
        }
    return p;
}

struct ModeStats {
    std::vector<double> solve_ms;
    std::vector<double> objectives;
    std::vector<int> radial_cuts;
    std::vector<int> leader_cuts;
    std::vector<int> iterations;
    std::vector<long> nodes;
};

struct BenchmarkReport {
    std::vector<SolveMode> modes;
    DriverKind driver = DriverKind::Callback;
    ScenarioBatch batch;
    std::vector<ModeStats> per_mode;  // parallel to modes

    // nominal-demand summary
    int energized_blocks = 0;
    int total_blocks = 0;
    double served_demand = 0.0;
    double total_demand = 0.0;
};

namespace bench_detail {

inline double average(const std::vector<int>& v) {
    if (v.empty()) return 0.0;
    double s = 0.0;
    for (int x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    std::size_t k = v.size() / 2;
    return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

}  // namespace bench_detail

/**
 * Solves every scenario in every requested mode (worker pool over
 * scenarios), asserts per-scenario objective agreement across modes within
 * 1e-6 before aggregating, and records per-scenario arrays plus the
 * nominal-demand load-served summary.
 *
 * Throws ContractViolation on any cross-mode objective disagreement.
 */
inline BenchmarkReport run_benchmark(const PartitionProblem& problem,
                                     const std::vector<SolveMode>& modes,
                                     const ScenarioBatch& batch,
                                     DriverKind driver = DriverKind::Callback,
                                     unsigned jobs = 0) {
    if (modes.empty()) throw std::invalid_argument("run_benchmark: no modes requested");
    problem.validate();

    BenchmarkReport report;
    report.modes = modes;
    report.driver = driver;
    report.batch = batch;
    report.per_mode.assign(modes.size(), {});
    for (ModeStats& ms : report.per_mode) {
        ms.solve_ms.assign(batch.count, 0.0);
        ms.objectives.assign(batch.count, 0.0);
        ms.radial_cuts.assign(batch.count, 0);
        ms.leader_cuts.assign(batch.count, 0);
        ms.iterations.assign(batch.count, 0);
        ms.nodes.assign(batch.count, 0);
    }

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, std::max(1, batch.count));
    std::atomic<int> next{0};
    std::vector<std::string> failures(batch.count);

    auto worker = [&]() {
        while (true) {
            int idx = next.fetch_add(1);
            if (idx >= batch.count) return;
            PartitionProblem scenario = sample_scenario(problem, batch, idx);
            for (std::size_t m = 0; m < modes.size(); ++m) {
                SolveReport r = solve_with_cuts(scenario, modes[m], driver);
                if (r.status != SolveStatus::Optimal) {
                    failures[idx] = std::string("scenario ") + std::to_string(idx) + " mode " +
                                    to_string(modes[m]) + ": " + to_string(r.status);
                    return;
                }
                ModeStats& ms = report.per_mode[m];
                ms.solve_ms[idx] = r.wall_ms;
                ms.objectives[idx] = r.objective;
                ms.radial_cuts[idx] = r.cycle_cut_count;
                ms.leader_cuts[idx] = r.leader_cut_count;
                ms.iterations[idx] = r.iterations;
                ms.nodes[idx] = r.node_count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    for (const std::string& f : failures)
        if (!f.empty()) throw std::runtime_error("benchmark solve failed: " + f);

    for (int idx = 0; idx < batch.count; ++idx)
        for (std::size_t m = 1; m < modes.size(); ++m)
            if (std::fabs(report.per_mode[m].objectives[idx] -
                          report.per_mode[0].objectives[idx]) > 1e-6)
                throw ContractViolation(
                    "optimality preservation violated in scenario " + std::to_string(idx) +
                    ": mode " + to_string(modes[m]) + " disagrees with " + to_string(modes[0]));

    // Nominal-demand solve for the load-served summary.
    SolveReport nominal = solve_with_cuts(problem, modes.front(), driver);
    report.energized_blocks = nominal.energized_blocks;
    report.total_blocks = problem.block_count();
    report.served_demand = nominal.served_demand;
    report.total_demand = problem.total_demand();
    return report;
}

/// Benchmark report as JSON: per-scenario arrays plus recomputable
/// aggregates in the shape of the cut-statistics and load-recovery tables.
inline Json benchmark_report_to_json(const BenchmarkReport& r) {
    using bench_detail::average;
    using bench_detail::median;
    Json doc;
    doc["driver"] = to_string(r.driver);
    doc["scenarios"] = r.batch.count;
    doc["rho"] = r.batch.rho;
    doc["seed"] = r.batch.seed;
    Json modes = Json::array();
    for (SolveMode m : r.modes) modes.push_back(to_string(m));
    doc["modes"] = std::move(modes);

    double full_median_ms = -1.0;
    for (std::size_t m = 0; m < r.modes.size(); ++m)
        if (r.modes[m] == SolveMode::Full)
            full_median_ms = median(r.per_mode[m].solve_ms);

    doc["per_mode"] = Json::object();
    for (std::size_t m = 0; m < r.modes.size(); ++m) {
        const ModeStats& ms = r.per_mode[m];
        Json jm;
        jm["solve_ms"] = ms.solve_ms;
        jm["objectives"] = ms.objectives;
        jm["radial_cuts"] = ms.radial_cuts;
        jm["leader_cuts"] = ms.leader_cuts;
        jm["iterations"] = ms.iterations;
        jm["nodes"] = ms.nodes;
        auto minmax_int = [](const std::vector<int>& v) {
            int lo = v.empty() ? 0 : *std::min_element(v.begin(), v.end());
            int hi = v.empty() ? 0 : *std::max_element(v.begin(), v.end());
            return std::pair<int, int>(lo, hi);
        };
        auto [rlo, rhi] = minmax_int(ms.radial_cuts);
        auto [llo, lhi] = minmax_int(ms.leader_cuts);
        jm["aggregates"] = {
            {"radial_cuts", {{"avg", average(ms.radial_cuts)}, {"min", rlo}, {"max", rhi}}},
            {"leader_cuts", {{"avg", average(ms.leader_cuts)}, {"min", llo}, {"max", lhi}}},
            {"median_ms", median(ms.solve_ms)},
        };
        if (full_median_ms > 0.0 && r.modes[m] != SolveMode::Full) {
            double own = median(ms.solve_ms);
            jm["aggregates"]["median_speedup_vs_full"] =
                own > 0.0 ? full_median_ms / own : 0.0;
        }
        doc["per_mode"][to_string(r.modes[m])] = std::move(jm);
    }

    doc["load_served"] = {
        {"energized_blocks", r.energized_blocks},
        {"total_blocks", r.total_blocks},
        {"served", r.served_demand},
        {"total_demand", r.total_demand},
        {"percent_served",
         r.total_demand > 0 ? 100.0 * r.served_demand / r.total_demand : 100.0},
    };
    return doc;
}

}  // namespace netpart

#endif  // NETPART_BENCH_HPP
