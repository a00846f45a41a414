/**
 * @file simplex.hpp
 * @brief Bounded-variable primal simplex with composite phase 1, Bland
 *        anti-cycling fallback and warm starts across bound changes and row
 *        additions (the hooks branch-and-bound needs).
 */

#ifndef NETPART_SIMPLEX_HPP
#define NETPART_SIMPLEX_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "netpart/model.hpp"

namespace netpart {

namespace lp {
constexpr double kInfinity = 1e30;
inline bool is_finite_bound(double b) { return std::fabs(b) < 0.5 * kInfinity; }
}  // namespace lp

/**
 * Primal simplex over   A x + s = b,   l <= (x,s) <= u.
 *
 * Slack bounds encode the row sense (<=: s >= 0, >=: s <= 0, =: s fixed 0).
 * The basis inverse is kept explicitly and updated in product form; the
 * solver refactorizes periodically and falls back to the all-slack basis if
 * the basis matrix turns out singular.
 *
 * The object stays valid between solves: variable bounds may be tightened or
 * relaxed and rows appended, after which solve() warm-starts from the current
 * basis.
 */
class SimplexSolver {
public:
    void load(const MipModel& model) {
        n_struct_ = model.variable_count();
        m_ = 0;
        cols_.assign(n_struct_, {});
        lb_.assign(n_struct_, 0.0);
        ub_.assign(n_struct_, 0.0);
        cost_.assign(n_struct_, 0.0);
        rhs_.clear();
        offset_ = model.objective_offset;
        for (int j = 0; j < n_struct_; ++j) {
            lb_[j] = model.variables[j].lb;
            ub_[j] = model.variables[j].ub;
            cost_[j] = model.variables[j].obj;
        }
        basic_.clear();
        state_.assign(n_struct_, kAtLower);
        for (int j = 0; j < n_struct_; ++j) snap_nonbasic(j);
        for (const LinearRow& r : model.rows) append_row(r);
        reset_to_slack_basis();
    }

    /// Re-reads objective coefficients and variable bounds from `model`
    /// (same shape), keeping the current basis for a warm start.
    void sync_bounds_and_costs(const MipModel& model) {
        offset_ = model.objective_offset;
        for (int j = 0; j < n_struct_; ++j) {
            cost_[j] = model.variables[j].obj;
            set_variable_bounds(j, model.variables[j].lb, model.variables[j].ub);
        }
    }

    void set_variable_bounds(int j, double lb, double ub) {
        lb_[j] = lb;
        ub_[j] = ub;
        if (state_[j] != kBasic) snap_nonbasic(j);
        values_fresh_ = false;
    }

    /// Appends a constraint row; its slack enters the basis via a bordered
    /// inverse update, so no refactorization is needed.
    void add_row(const LinearRow& row) {
        int slack = append_row(row);
        // Bordered update: B_new = [[B, 0], [r_B, 1]].
        int r = m_ - 1;
        std::vector<double> rb(m_ - 1, 0.0);
        for (auto [j, c] : row.terms)
            if (state_[j] == kBasic) rb[basic_pos_[j]] += c;
        for (int i = 0; i < m_ - 1; ++i) binv_row(i).push_back(0.0);
        binv_.push_back(std::vector<double>(m_, 0.0));
        auto& last = binv_.back();
        for (int k = 0; k < m_ - 1; ++k) {
            double acc = 0.0;
            for (int i = 0; i < m_ - 1; ++i) acc += rb[i] * binv_[i][k];
            last[k] = -acc;
        }
        last[r] = 1.0;
        basic_.push_back(slack);
        basic_pos_[slack] = r;
        state_[slack] = kBasic;
        values_fresh_ = false;
    }

    int structural_count() const { return n_struct_; }
    int row_count() const { return m_; }

    LpSolution solve() {
        LpSolution out;
        if (!factorized_) {
            if (!refactorize()) reset_to_slack_basis();
        }
        recompute_basic_values();

        int iterations = 0;
        const int max_iterations = 20000 + 60 * m_;
        int degenerate_run = 0;
        bool bland = false;

        // Phase 1: drive basic variables inside their bounds.
        while (true) {
            if (iterations > max_iterations) return fail(out, iterations);
            double infeas = total_infeasibility();
            if (infeas <= kFeasTol * (1.0 + m_)) break;

            std::vector<double> pc(m_, 0.0);  // phase-1 cost on basics
            for (int i = 0; i < m_; ++i) {
                int j = basic_[i];
                if (x_[j] < lb_[j] - kFeasTol) pc[i] = -1.0;
                else if (x_[j] > ub_[j] + kFeasTol) pc[i] = 1.0;
            }
            std::vector<double> y = btran(pc);
            int enter = price(y, nullptr, bland);
            if (enter < 0) {
                out.status = LpStatus::Infeasible;
                out.iterations = iterations;
                return out;
            }
            if (!step(enter, true, bland, degenerate_run)) return fail(out, iterations);
            ++iterations;
            bland = degenerate_run > 400;
            maybe_refactorize();
        }

        // Phase 2: optimize the real objective.
        degenerate_run = 0;
        bland = false;
        while (true) {
            if (iterations > max_iterations) return fail(out, iterations);
            std::vector<double> cb(m_, 0.0);
            for (int i = 0; i < m_; ++i) cb[i] = cost_of(basic_[i]);
            std::vector<double> y = btran(cb);
            int enter = price(y, &cost_, bland);
            if (enter < 0) break;  // optimal
            int rc = step(enter, false, bland, degenerate_run);
            if (rc == kStepFailed) return fail(out, iterations);
            if (rc == kStepUnbounded) {
                out.status = LpStatus::Unbounded;
                out.iterations = iterations;
                return out;
            }
            ++iterations;
            bland = degenerate_run > 400;
            maybe_refactorize();
        }

        // Polish values and double-check primal feasibility.
        if (!refactorize()) reset_to_slack_basis();
        recompute_basic_values();
        if (total_infeasibility() > kFeasTol * (10.0 + m_)) {
            // Drift slipped through; one clean retry from the current basis.
            if (++retry_depth_ <= 1) {
                LpSolution again = solve();
                --retry_depth_;
                again.iterations += iterations;
                return again;
            }
            --retry_depth_;
            return fail(out, iterations);
        }

        out.status = LpStatus::Optimal;
        out.x.assign(x_.begin(), x_.begin() + n_struct_);
        out.objective = offset_;
        for (int j = 0; j < n_struct_; ++j) out.objective += cost_[j] * x_[j];
        out.iterations = iterations;
        return out;
    }

private:
    static constexpr double kFeasTol = 1e-7;
    static constexpr double kDualTol = 1e-7;
    static constexpr double kPivotTol = 1e-9;
    enum State : std::uint8_t { kAtLower = 0, kAtUpper = 1, kBasic = 2 };
    enum StepResult { kStepFailed = 0, kStepOk = 1, kStepUnbounded = 2 };

    int n_struct_ = 0;
    int m_ = 0;
    std::vector<std::vector<std::pair<int, double>>> cols_;  // structural columns
    std::vector<double> lb_, ub_, cost_;  // structurals then slacks
    std::vector<double> rhs_;
    double offset_ = 0.0;

    std::vector<int> basic_;              // basic column per row
    std::vector<int> basic_pos_;          // column -> row (valid when basic)
    std::vector<std::uint8_t> state_;
    std::vector<double> x_;
    std::vector<std::vector<double>> binv_;
    bool factorized_ = false;
    bool values_fresh_ = false;
    int pivots_since_refactor_ = 0;
    int retry_depth_ = 0;

    std::vector<double>& binv_row(int i) { return binv_[i]; }

    int total_cols() const { return n_struct_ + m_; }

    double cost_of(int j) const { return j < n_struct_ ? cost_[j] : 0.0; }

    /// Column j as sparse (row, coeff) list. Slack columns are unit vectors.
    void column(int j, std::vector<std::pair<int, double>>& out) const {
        out.clear();
        if (j < n_struct_) {
            out = cols_[j];
        } else {
            out.push_back({j - n_struct_, 1.0});
        }
    }

    int append_row(const LinearRow& row) {
        int r = m_;
        double slo = 0.0, shi = 0.0;
        switch (row.sense) {
            case RowSense::LE: slo = 0.0; shi = lp::kInfinity; break;
            case RowSense::GE: slo = -lp::kInfinity; shi = 0.0; break;
            case RowSense::EQ: slo = 0.0; shi = 0.0; break;
        }
        rhs_.push_back(row.rhs);
        lb_.push_back(slo);
        ub_.push_back(shi);
        for (auto [j, c] : row.terms)
            if (c != 0.0) cols_[j].push_back({r, c});
        state_.push_back(kAtLower);
        ++m_;
        basic_pos_.assign(total_cols(), -1);
        for (int i = 0; i < static_cast<int>(basic_.size()); ++i) basic_pos_[basic_[i]] = i;
        return n_struct_ + r;
    }

    void reset_to_slack_basis() {
        basic_.resize(m_);
        basic_pos_.assign(total_cols(), -1);
        for (int j = 0; j < total_cols(); ++j)
            if (state_[j] == kBasic) state_[j] = kAtLower;
        for (int i = 0; i < m_; ++i) {
            int s = n_struct_ + i;
            basic_[i] = s;
            basic_pos_[s] = i;
            state_[s] = kBasic;
        }
        for (int j = 0; j < total_cols(); ++j)
            if (state_[j] != kBasic) snap_nonbasic(j);
        binv_.assign(m_, std::vector<double>(m_, 0.0));
        for (int i = 0; i < m_; ++i) binv_[i][i] = 1.0;
        factorized_ = true;
        values_fresh_ = false;
        pivots_since_refactor_ = 0;
    }

    void snap_nonbasic(int j) {
        if (static_cast<int>(x_.size()) < total_cols()) x_.resize(total_cols(), 0.0);
        double lo = lb_[j], hi = ub_[j];
        if (state_[j] == kAtUpper && lp::is_finite_bound(hi)) {
            x_[j] = hi;
        } else if (lp::is_finite_bound(lo)) {
            state_[j] = kAtLower;
            x_[j] = lo;
        } else if (lp::is_finite_bound(hi)) {
            state_[j] = kAtUpper;
            x_[j] = hi;
        } else {
            state_[j] = kAtLower;
            x_[j] = 0.0;
        }
    }

    void recompute_basic_values() {
        x_.resize(total_cols(), 0.0);
        for (int j = 0; j < total_cols(); ++j)
            if (state_[j] != kBasic) snap_nonbasic(j);
        // x_B = B^-1 (rhs - N x_N): accumulate residual then multiply.
        std::vector<double> resid(rhs_);
        std::vector<std::pair<int, double>> col;
        for (int j = 0; j < total_cols(); ++j) {
            if (state_[j] == kBasic || x_[j] == 0.0) continue;
            column(j, col);
            for (auto [r, c] : col) resid[r] -= c * x_[j];
        }
        for (int i = 0; i < m_; ++i) {
            double acc = 0.0;
            const auto& row = binv_[i];
            for (int k = 0; k < m_; ++k) acc += row[k] * resid[k];
            x_[basic_[i]] = acc;
        }
        values_fresh_ = true;
    }

    double total_infeasibility() const {
        double t = 0.0;
        for (int i = 0; i < m_; ++i) {
            int j = basic_[i];
            if (x_[j] < lb_[j]) t += lb_[j] - x_[j];
            else if (x_[j] > ub_[j]) t += x_[j] - ub_[j];
        }
        return t;
    }

    std::vector<double> btran(const std::vector<double>& cb) const {
        std::vector<double> y(m_, 0.0);
        for (int i = 0; i < m_; ++i) {
            double ci = cb[i];
            if (ci == 0.0) continue;
            const auto& row = binv_[i];
            for (int k = 0; k < m_; ++k) y[k] += ci * row[k];
        }
        return y;
    }

    /// Dantzig (or Bland) pricing. `costs` is null in phase 1, where nonbasic
    /// objective coefficients are zero.
    int price(const std::vector<double>& y, const std::vector<double>* costs,
              bool bland) const {
        int best = -1;
        double best_score = kDualTol;
        std::vector<std::pair<int, double>> col;
        for (int j = 0; j < total_cols(); ++j) {
            if (state_[j] == kBasic) continue;
            if (lb_[j] == ub_[j]) continue;  // fixed, never enters
            double d = (costs && j < n_struct_) ? (*costs)[j] : 0.0;
            if (j < n_struct_) {
                for (auto [r, c] : cols_[j]) d -= y[r] * c;
            } else {
                d -= y[j - n_struct_];
            }
            double score = 0.0;
            if (state_[j] == kAtLower && d < -kDualTol) score = -d;
            else if (state_[j] == kAtUpper && d > kDualTol) score = d;
            else continue;
            if (bland) return j;  // first eligible, lowest index
            if (score > best_score) {
                best_score = score;
                best = j;
            }
        }
        return best;
    }

    /**
     * One simplex step for entering column `enter`. In phase 1 the ratio test
     * also stops at the violated bound of infeasible basics (the kink of the
     * piecewise-linear infeasibility).
     */
    int step(int enter, bool phase1, bool bland, int& degenerate_run) {
        std::vector<std::pair<int, double>> col;
        column(enter, col);
        std::vector<double> alpha(m_, 0.0);
        for (int i = 0; i < m_; ++i) {
            double acc = 0.0;
            const auto& row = binv_[i];
            for (auto [r, c] : col) acc += row[r] * c;
            alpha[i] = acc;
        }
        double sigma = state_[enter] == kAtLower ? 1.0 : -1.0;

        double best_t = lp::kInfinity;
        int leave = -1;          // basis position of blocking variable
        double leave_bound = 0;  // value the leaving variable lands on
        // Entering variable's own range: bound flip candidate.
        if (lp::is_finite_bound(lb_[enter]) && lp::is_finite_bound(ub_[enter]))
            best_t = ub_[enter] - lb_[enter];

        for (int i = 0; i < m_; ++i) {
            double a = sigma * alpha[i];
            if (std::fabs(a) < kPivotTol) continue;
            int j = basic_[i];
            double t, bound;
            if (a > 0) {  // basic decreases
                double target;
                if (phase1 && x_[j] > ub_[j] + kFeasTol) target = ub_[j];        // kink
                else if (x_[j] < lb_[j] - kFeasTol) continue;                    // already below
                else target = lb_[j];
                if (!lp::is_finite_bound(target)) continue;
                t = (x_[j] - target) / a;
                bound = target;
            } else {  // basic increases
                double target;
                if (phase1 && x_[j] < lb_[j] - kFeasTol) target = lb_[j];        // kink
                else if (x_[j] > ub_[j] + kFeasTol) continue;                    // already above
                else target = ub_[j];
                if (!lp::is_finite_bound(target)) continue;
                t = (x_[j] - target) / a;
                bound = target;
            }
            if (t < -kFeasTol) t = 0.0;
            if (t < best_t - 1e-12 ||
                (bland && leave >= 0 && std::fabs(t - best_t) <= 1e-12 && j < basic_[leave])) {
                best_t = std::max(t, 0.0);
                leave = i;
                leave_bound = bound;
            }
        }

        if (!lp::is_finite_bound(best_t)) return kStepUnbounded;

        if (best_t > 1e-8) degenerate_run = 0; else ++degenerate_run;

        // Apply the step.
        double t = best_t;
        for (int i = 0; i < m_; ++i) x_[basic_[i]] -= sigma * t * alpha[i];
        x_[enter] += sigma * t;

        if (leave < 0) {
            // Bound flip: entering variable moved to its other bound.
            state_[enter] = state_[enter] == kAtLower ? kAtUpper : kAtLower;
            x_[enter] = state_[enter] == kAtLower ? lb_[enter] : ub_[enter];
            return kStepOk;
        }

        double piv = alpha[leave];
        if (std::fabs(piv) < kPivotTol) return kStepFailed;

        int out_var = basic_[leave];
        x_[out_var] = leave_bound;
        state_[out_var] = leave_bound == lb_[out_var] ? kAtLower : kAtUpper;
        basic_pos_[out_var] = -1;
        basic_[leave] = enter;
        basic_pos_[enter] = leave;
        state_[enter] = kBasic;

        // Product-form update of the explicit inverse.
        std::vector<double>& prow = binv_[leave];
        double inv_piv = 1.0 / piv;
        for (int k = 0; k < m_; ++k) prow[k] *= inv_piv;
        for (int i = 0; i < m_; ++i) {
            if (i == leave) continue;
            double f = alpha[i];
            if (f == 0.0) continue;
            auto& row = binv_[i];
            for (int k = 0; k < m_; ++k) row[k] -= f * prow[k];
        }
        ++pivots_since_refactor_;
        return kStepOk;
    }

    void maybe_refactorize() {
        if (pivots_since_refactor_ < 120 + m_ / 8) return;
        if (!refactorize()) reset_to_slack_basis();
        recompute_basic_values();
    }

    /// Rebuilds the explicit inverse by Gauss-Jordan with partial pivoting.
    /// Returns false if the basis matrix is (numerically) singular.
    bool refactorize() {
        std::vector<std::vector<double>> a(m_, std::vector<double>(m_, 0.0));
        std::vector<std::pair<int, double>> col;
        for (int i = 0; i < m_; ++i) {
            column(basic_[i], col);
            for (auto [r, c] : col) a[r][i] += c;  // rows may repeat a variable
        }
        std::vector<std::vector<double>> inv(m_, std::vector<double>(m_, 0.0));
        for (int i = 0; i < m_; ++i) inv[i][i] = 1.0;
        for (int c = 0; c < m_; ++c) {
            int piv = -1;
            double best = 1e-11;
            for (int r = c; r < m_; ++r)
                if (std::fabs(a[r][c]) > best) {
                    best = std::fabs(a[r][c]);
                    piv = r;
                }
            if (piv < 0) return false;
            std::swap(a[piv], a[c]);
            std::swap(inv[piv], inv[c]);
            double d = 1.0 / a[c][c];
            for (int k = 0; k < m_; ++k) {
                a[c][k] *= d;
                inv[c][k] *= d;
            }
            for (int r = 0; r < m_; ++r) {
                if (r == c) continue;
                double f = a[r][c];
                if (f == 0.0) continue;
                for (int k = 0; k < m_; ++k) {
                    a[r][k] -= f * a[c][k];
                    inv[r][k] -= f * inv[c][k];
                }
            }
        }
        // inv now maps: column order is basis order, but binv_ is indexed by
        // basis position i with rows of B^-1; a[r][i] built B with column i =
        // basic_[i], so inv rows correspond to basis positions already.
        binv_ = std::move(inv);
        factorized_ = true;
        pivots_since_refactor_ = 0;
        return true;
    }

    LpSolution fail(LpSolution& out, int iterations) {
        out.status = LpStatus::SolverFailure;
        out.iterations = iterations;
        return out;
    }
};

/// Solves a model from scratch (fresh solver, cold basis).
inline LpSolution solve_lp(const MipModel& model) {
    SimplexSolver solver;
    solver.load(model);
    return solver.solve();
}

}  // namespace netpart

#endif  // NETPART_SIMPLEX_HPP
