/**
 * @file network_io.hpp
 * @brief Network file ingestion and report serialization (JSON documents
 *        with a stable field order).
 */

#ifndef NETPART_NETWORK_IO_HPP
#define NETPART_NETWORK_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "netpart/driver.hpp"
#include "netpart/problem.hpp"

namespace netpart {

/// Parse or semantic error in a network document, with position context.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using Json = nlohmann::ordered_json;

namespace io_detail {

template <typename T>
T require_field(const Json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(where + ": field '" + key + "' has the wrong type");
    }
}

template <typename T>
T optional_field(const Json& obj, const std::string& key, T fallback,
                 const std::string& where) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(where + ": field '" + key + "' has the wrong type");
    }
}

}  // namespace io_detail

/// Parses a network document from a string. `origin` names the source in
/// error messages.
inline PartitionProblem parse_network_string(const std::string& text,
                                             const std::string& origin = "<string>") {
    using io_detail::optional_field;
    using io_detail::require_field;
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }

    PartitionProblem p;
    if (!doc.contains("blocks") || !doc["blocks"].is_array())
        throw ParseError(origin + ": expected a 'blocks' array");
    int bi = 0;
    for (const Json& jb : doc["blocks"]) {
        std::string where = origin + ": blocks[" + std::to_string(bi++) + "]";
        Block b;
        b.id = require_field<int>(jb, "id", where);
        b.intermediaries = optional_field<int>(jb, "intermediaries", 0, where);
        if (jb.contains("providers")) {
            int pi = 0;
            for (const Json& jp : jb["providers"]) {
                std::string pwhere = where + ".providers[" + std::to_string(pi++) + "]";
                Provider pr;
                pr.name = optional_field<std::string>(jp, "name", "", pwhere);
                pr.cmin = optional_field<double>(jp, "cmin", 0.0, pwhere);
                pr.cmax = require_field<double>(jp, "cmax", pwhere);
                pr.cost = optional_field<double>(jp, "cost", 1.0, pwhere);
                pr.leader_eligible = optional_field<bool>(jp, "leader_eligible", false, pwhere);
                b.providers.push_back(std::move(pr));
            }
        }
        if (jb.contains("consumers")) {
            int ci = 0;
            for (const Json& jc : jb["consumers"]) {
                std::string cwhere = where + ".consumers[" + std::to_string(ci++) + "]";
                Consumer c;
                c.name = optional_field<std::string>(jc, "name", "", cwhere);
                c.demand = require_field<double>(jc, "demand", cwhere);
                b.consumers.push_back(std::move(c));
            }
        }
        p.blocks.push_back(std::move(b));
    }
    if (doc.contains("switches")) {
        int si = 0;
        for (const Json& js : doc["switches"]) {
            std::string where = origin + ": switches[" + std::to_string(si++) + "]";
            Switch sw;
            sw.from = require_field<int>(js, "from", where);
            sw.to = require_field<int>(js, "to", where);
            sw.rmax = optional_field<double>(js, "rmax", 1.0, where);
            p.switches.push_back(sw);
        }
    }
    if (doc.contains("parameters")) {
        const Json& jp = doc["parameters"];
        std::string where = origin + ": parameters";
        p.kappa = optional_field<int>(jp, "kappa", 1, where);
        p.nu = optional_field<double>(jp, "nu", 0.9, where);
        p.gamma = optional_field<double>(jp, "gamma", 1.0, where);
    }
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(origin + ": " + e.what());
    }
    return p;
}

/// Parses a network file from disk.
inline PartitionProblem parse_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_network_string(ss.str(), path);
}

/// Canonical serialization; parse(serialize(p)) reproduces p field by field.
inline std::string serialize_network(const PartitionProblem& p) {
    Json doc;
    doc["blocks"] = Json::array();
    for (const Block& b : p.blocks) {
        Json jb;
        jb["id"] = b.id;
        if (b.intermediaries != 0) jb["intermediaries"] = b.intermediaries;
        jb["providers"] = Json::array();
        for (const Provider& pr : b.providers) {
            Json jp;
            jp["name"] = pr.name;
            jp["cmin"] = pr.cmin;
            jp["cmax"] = pr.cmax;
            jp["cost"] = pr.cost;
            jp["leader_eligible"] = pr.leader_eligible;
            jb["providers"].push_back(std::move(jp));
        }
        jb["consumers"] = Json::array();
        for (const Consumer& c : b.consumers) {
            Json jc;
            jc["name"] = c.name;
            jc["demand"] = c.demand;
            jb["consumers"].push_back(std::move(jc));
        }
        doc["blocks"].push_back(std::move(jb));
    }
    doc["switches"] = Json::array();
    for (const Switch& sw : p.switches) {
        Json js;
        js["from"] = sw.from;
        js["to"] = sw.to;
        js["rmax"] = sw.rmax;
        doc["switches"].push_back(std::move(js));
    }
    doc["parameters"] = {{"kappa", p.kappa}, {"nu", p.nu}, {"gamma", p.gamma}};
    return doc.dump(2) + "\n";
}

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::InternalError: return "internal-error";
    }
    return "?";
}

/// SolveReport as a JSON document (stable schema, plot-ready fields).
inline Json solve_report_to_json(const PartitionProblem& problem, const SolveReport& r) {
    Json doc;
    doc["mode"] = to_string(r.mode);
    doc["driver"] = to_string(r.driver);
    doc["status"] = to_string(r.status);
    if (r.status != SolveStatus::Optimal) return doc;

    doc["objective"] = r.objective;
    doc["iterations"] = r.iterations;
    doc["cuts"] = {{"radial", r.cycle_cut_count}, {"leader", r.leader_cut_count}};
    doc["node_count"] = r.node_count;
    doc["wall_ms"] = r.wall_ms;

    Json topology = Json::array();
    for (const Component& c : r.topology.components) {
        Json jc;
        jc["blocks"] = c.blocks;
        bool active = r.solution.block_active[problem.block_index(c.blocks.front())];
        jc["active"] = active;
        Json leaders = Json::array();
        const auto eligible = problem.eligible_providers();
        for (int g : c.eligible_leaders)
            if (r.solution.leader_selected[g]) {
                const ProviderRef& ref = eligible[g];
                const Provider& pr = problem.provider(ref);
                leaders.push_back(pr.name.empty()
                                      ? "block" + std::to_string(problem.blocks[ref.block].id) +
                                            "/p" + std::to_string(ref.provider)
                                      : pr.name);
            }
        jc["leaders"] = std::move(leaders);
        double demand = 0.0;
        for (BlockId id : c.blocks) demand += problem.block_demand(problem.block_index(id));
        jc["demand"] = demand;
        jc["served"] = active ? demand : 0.0;
        topology.push_back(std::move(jc));
    }
    doc["topology"] = std::move(topology);

    Json switches = Json::array();
    for (int s = 0; s < problem.switch_count(); ++s)
        switches.push_back(r.solution.switch_state.closed(s) ? 1 : 0);
    doc["closed_switches"] = std::move(switches);
    doc["energized_blocks"] = r.energized_blocks;
    doc["served_demand"] = r.served_demand;
    doc["shed_demand"] = r.shed_demand;
    double total = problem.total_demand();
    doc["percent_served"] = total > 0 ? 100.0 * r.served_demand / total : 100.0;
    return doc;
}

}  // namespace netpart

#endif  // NETPART_NETWORK_IO_HPP
