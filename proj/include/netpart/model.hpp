/**
 * @file model.hpp
 * @brief Generic linear model with binary and continuous variables, plus
 *        LP/MIP solution records.
 */

#ifndef NETPART_MODEL_HPP
#define NETPART_MODEL_HPP

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netpart {

/// Contract breach between solver and callback (or between modules); maps to
/// CLI exit code 4.
class ContractViolation : public std::runtime_error {
public:
    explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

enum class VarKind { Binary, Continuous };

enum class RowSense { LE, EQ, GE };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Continuous;
    double lb = 0.0;
    double ub = 0.0;
    double obj = 0.0;
};

/// Sparse constraint row: sum(coeff * var) sense rhs.
struct LinearRow {
    std::vector<std::pair<int, double>> terms;
    RowSense sense = RowSense::LE;
    double rhs = 0.0;
    std::string name;
};

/**
 * Minimization model over binary and bounded continuous variables.
 *
 * Binary variables have bounds within [0,1]; continuous variables must carry
 * finite bounds (constraint builders supply big-M style bounds).
 */
class MipModel {
public:
    std::vector<Variable> variables;
    std::vector<LinearRow> rows;
    double objective_offset = 0.0;

    int add_variable(const std::string& name, VarKind kind, double lb, double ub,
                     double obj = 0.0) {
        if (kind == VarKind::Binary) {
            if (lb < 0.0 || ub > 1.0 || lb > ub)
                throw std::invalid_argument("binary variable " + name +
                                            " must have bounds within [0,1]");
        } else {
            if (!std::isfinite(lb) || !std::isfinite(ub) || lb > ub)
                throw std::invalid_argument("continuous variable " + name +
                                            " must have finite ordered bounds");
        }
        variables.push_back({name, kind, lb, ub, obj});
        return static_cast<int>(variables.size()) - 1;
    }

    void add_row(LinearRow row) {
        for (auto& [v, c] : row.terms)
            if (v < 0 || v >= static_cast<int>(variables.size()))
                throw std::invalid_argument("row " + row.name +
                                            " references unknown variable");
        rows.push_back(std::move(row));
    }

    int variable_count() const { return static_cast<int>(variables.size()); }
    int row_count() const { return static_cast<int>(rows.size()); }

    double objective_value(const std::vector<double>& x) const {
        double v = objective_offset;
        for (int j = 0; j < variable_count(); ++j) v += variables[j].obj * x[j];
        return v;
    }

    /// Fixes a variable to a value by collapsing its bounds.
    void fix_variable(int var, double value) {
        variables.at(var).lb = value;
        variables.at(var).ub = value;
    }

    /// Plain-text dump in an LP-file-like layout, for debugging only.
    void write_lp(std::ostream& os) const {
        os << "minimize\n  obj:";
        if (objective_offset != 0.0) os << " " << objective_offset << " +";
        for (int j = 0; j < variable_count(); ++j)
            if (variables[j].obj != 0.0)
                os << " " << (variables[j].obj >= 0 ? "+" : "") << variables[j].obj << " "
                   << variables[j].name;
        os << "\nsubject to\n";
        for (const LinearRow& r : rows) {
            os << "  " << (r.name.empty() ? "c" : r.name) << ":";
            for (auto [v, c] : r.terms)
                os << " " << (c >= 0 ? "+" : "") << c << " " << variables[v].name;
            os << (r.sense == RowSense::LE ? " <= " : r.sense == RowSense::EQ ? " = " : " >= ")
               << r.rhs << "\n";
        }
        os << "bounds\n";
        for (const Variable& v : variables)
            os << "  " << v.lb << " <= " << v.name << " <= " << v.ub << "\n";
        os << "binaries\n ";
        for (const Variable& v : variables)
            if (v.kind == VarKind::Binary) os << " " << v.name;
        os << "\nend\n";
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded, SolverFailure };

struct LpSolution {
    LpStatus status = LpStatus::SolverFailure;
    std::vector<double> x;
    double objective = 0.0;
    int iterations = 0;
};

enum class MipStatus { Optimal, Infeasible };

struct MipSolution {
    MipStatus status = MipStatus::Infeasible;
    std::vector<double> x;  // binaries rounded to exact 0/1
    double objective = 0.0;
    long node_count = 0;
    int callback_cut_count = 0;
};

/// Solver tolerances; defaults are the project-wide values.
struct Tolerances {
    static constexpr double feasibility = 1e-7;
    static constexpr double integrality = 1e-6;
    static constexpr double objective = 1e-6;
};

}  // namespace netpart

#endif  // NETPART_MODEL_HPP
