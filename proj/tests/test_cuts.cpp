#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "netpart/cuts.hpp"
#include "support.hpp"

using namespace netpart;
using testsupport::simple_problem;

namespace {

CandidateSolution make_candidate(const PartitionProblem& p, const SwitchState& st,
                                 std::vector<std::uint8_t> active,
                                 std::vector<std::uint8_t> leaders) {
    CandidateSolution c;
    c.switch_state = st;
    c.block_active = std::move(active);
    c.leader_selected = std::move(leaders);
    c.gen.assign(p.all_providers().size(), 0.0);
    c.flow.assign(p.switch_count(), 0.0);
    return c;
}

/// Model variable vector holding the candidate's binary part.
std::vector<double> candidate_vector(const MipModel& model, const VariableMap& vars,
                                     const CandidateSolution& c) {
    std::vector<double> x(model.variable_count(), 0.0);
    for (std::size_t s = 0; s < vars.z_sw.size(); ++s)
        x[vars.z_sw[s]] = c.switch_state.closed(static_cast<int>(s)) ? 1.0 : 0.0;
    for (std::size_t b = 0; b < vars.z_bl.size(); ++b) x[vars.z_bl[b]] = c.block_active[b];
    for (std::size_t g = 0; g < vars.z_ldr.size(); ++g) x[vars.z_ldr[g]] = c.leader_selected[g];
    return x;
}

}  // namespace

TEST_CASE("radial candidate produces no cycle cuts") {
    auto p = simple_problem(3, {{0, 1}, {1, 2}});
    auto [model, vars] = build_model(p, BuildMode::RelaxBoth);
    auto c = make_candidate(p, SwitchState{1, 1}, {1, 1, 1}, {1});
    CHECK(separate_cycles(p, vars, c).empty());
}

TEST_CASE("triangle candidate yields one violated cut with rhs 2") {
    auto p = simple_problem(3, {{0, 1}, {1, 2}, {0, 2}});
    auto [model, vars] = build_model(p, BuildMode::RelaxBoth);
    auto c = make_candidate(p, SwitchState{1, 1, 1}, {1, 1, 1}, {1});
    auto cuts = separate_cycles(p, vars, c);
    REQUIRE(cuts.size() == 1);
    CHECK(cuts[0].kind == CutKind::Cycle);
    CHECK(cuts[0].row.rhs == 2.0);
    CHECK(cuts[0].row.terms.size() == 3);
    CHECK(cut_violation(cuts[0], candidate_vector(model, vars, c)) == 1.0);
}

TEST_CASE("complete graph cuts exclude the candidate but no radial state") {
    auto p = simple_problem(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto [model, vars] = build_model(p, BuildMode::RelaxBoth);
    auto all_closed = make_candidate(p, SwitchState{1, 1, 1, 1, 1, 1}, {1, 1, 1, 1}, {1});
    auto cuts = separate_cycles(p, vars, all_closed);
    REQUIRE(cuts.size() == 3);  // fundamental basis of K4
    auto xc = candidate_vector(model, vars, all_closed);
    for (const Cut& cut : cuts) CHECK(cut_violation(cut, xc) >= 1.0);

    // Theorem 1: no radial configuration violates any of the three cuts.
    for (unsigned mask = 0; mask < 64; ++mask) {
        SwitchState st(6);
        for (int s = 0; s < 6; ++s) st.set(s, (mask >> s) & 1u);
        if (!is_radial(p, st)) continue;
        auto cfg = make_candidate(p, st, {1, 1, 1, 1}, {1});
        auto x = candidate_vector(model, vars, cfg);
        for (const Cut& cut : cuts) CHECK(cut_violation(cut, x) <= 0.0);
    }
}

TEST_CASE("phi indicator matches its definition") {
    auto p = simple_problem(4, {{0, 1}, {1, 2}, {2, 3}});
    ComponentSignature sig;
    sig.external_switches = {2};
    sig.internal_switches = {0, 1};
    sig.blocks = {0, 1, 2};
    sig.leaders = {0};

    auto c1 = make_candidate(p, SwitchState{1, 1, 0}, {1, 1, 1, 0}, {1});
    CHECK(evaluate_phi(c1, sig) == 1);

    auto c2 = make_candidate(p, SwitchState{1, 1, 1}, {1, 1, 1, 1}, {1});
    CHECK(evaluate_phi(c2, sig) == 0);  // external closed

    auto c3 = make_candidate(p, SwitchState{1, 0, 0}, {1, 1, 1, 0}, {1});
    CHECK(evaluate_phi(c3, sig) == 0);  // internal open

    auto c4 = make_candidate(p, SwitchState{1, 1, 0}, {1, 0, 1, 0}, {1});
    CHECK(evaluate_phi(c4, sig) == 0);  // inactive block
}

TEST_CASE("phi equals the linear lower-bound rhs indicator exhaustively") {
    // signature: 2 external, 2 internal, 2 blocks over a 4-block ring
    auto p = simple_problem(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    ComponentSignature sig;
    sig.external_switches = {2, 3};
    sig.internal_switches = {0, 1};
    sig.blocks = {1, 2};
    sig.leaders = {0};
    const int n_c = 2 + 2 + 2;

    for (unsigned m = 0; m < (1u << 8); ++m) {
        SwitchState st(4);
        for (int s = 0; s < 4; ++s) st.set(s, (m >> s) & 1u);
        std::vector<std::uint8_t> active(4);
        for (int b = 0; b < 4; ++b) active[b] = (m >> (4 + b)) & 1u;
        auto c = make_candidate(p, st, active, {0});

        int N = 0;
        for (SwitchId s : sig.external_switches) N += st.closed(s) ? 0 : 1;
        for (SwitchId s : sig.internal_switches) N += st.closed(s) ? 1 : 0;
        for (int b : sig.blocks) N += active[b];
        int linear_rhs = N - n_c + 1;  // rhs of the linearized lower bound
        if (evaluate_phi(c, sig) == 1) {
            CHECK(linear_rhs == 1);
        } else {
            CHECK(linear_rhs <= 0);
        }
    }
}

TEST_CASE("isolated active block without leaders triggers one lb cut") {
    auto p = simple_problem(3, {{0, 1}, {1, 2}});
    auto [model, vars] = build_model(p, BuildMode::RelaxBoth);
    // all switches open; only block 0 active; its eligible leader unselected
    auto c = make_candidate(p, SwitchState{0, 0}, {1, 0, 0}, {0});
    auto cuts = separate_leader_violations(p, vars, c, 1);
    REQUIRE(cuts.size() == 1);
    CHECK(cuts[0].kind == CutKind::LeaderLb);
    auto x = candidate_vector(model, vars, c);
    CHECK(cut_violation(cuts[0], x) == 1.0);  // lhs 0 < rhs 1
}

TEST_CASE("component with three leaders under kappa=1 triggers one ub cut") {
    auto p = simple_problem(3, {{0, 1}, {1, 2}}, 1);
    p.blocks[1].providers.push_back({"g1", 0.0, 9.0, 1.0, true});
    p.blocks[2].providers.push_back({"g2", 0.0, 9.0, 1.0, true});
    auto [model, vars] = build_model(p, BuildMode::RelaxBoth);
    auto c = make_candidate(p, SwitchState{1, 1}, {1, 1, 1}, {1, 1, 1});
    auto cuts = separate_leader_violations(p, vars, c, 1);
    REQUIRE(cuts.size() == 1);
    CHECK(cuts[0].kind == CutKind::LeaderUb);
    auto x = candidate_vector(model, vars, c);
    // at this configuration the cut reduces to sum z^ldr <= kappa
    CHECK(cut_violation(cuts[0], x) == 2.0);
}

TEST_CASE("flipping one internal switch makes both cut forms non-binding") {
    auto p = simple_problem(3, {{0, 1}, {1, 2}}, 1);
    p.blocks[1].providers.push_back({"g1", 0.0, 9.0, 1.0, true});
    p.blocks[2].providers.push_back({"g2", 0.0, 9.0, 1.0, true});
    auto [model, vars] = build_model(p, BuildMode::RelaxBoth);
    auto violating = make_candidate(p, SwitchState{1, 1}, {1, 1, 1}, {1, 1, 1});
    auto cuts = separate_leader_violations(p, vars, violating, 1);
    REQUIRE(cuts.size() == 1);

    // same component signature at a candidate with switch 1 open: phi = 0,
    // neither bound binds (the ub cut holds even with all three leaders on,
    // the lb rhs drops to <= 0).
    auto flipped = make_candidate(p, SwitchState{1, 0}, {1, 1, 1}, {1, 1, 1});
    CHECK(evaluate_phi(flipped, cuts[0].signature) == 0);
    auto x = candidate_vector(model, vars, flipped);
    CHECK(cut_violation(cuts[0], x) <= 0.0);

    Cut lb = make_leader_lb_cut(vars, cuts[0].signature);
    auto no_leaders = make_candidate(p, SwitchState{1, 0}, {1, 1, 1}, {0, 0, 0});
    CHECK(cut_violation(lb, candidate_vector(model, vars, no_leaders)) <= 0.0);
}

TEST_CASE("mixed-activity components produce no leader cuts") {
    auto p = simple_problem(2, {{0, 1}});
    auto [model, vars] = build_model(p, BuildMode::RelaxBoth);
    // status-inconsistent candidate (possible only for hand-made inputs)
    auto c = make_candidate(p, SwitchState{1}, {1, 0}, {0});
    CHECK(separate_leader_violations(p, vars, c, 1).empty());
}

TEST_CASE("lemma 1: linear cuts equal the nonlinear forms on all assignments") {
    // Exhaustive over signature sizes: up to 3 external, 3 internal, 3 blocks,
    // |L_C| in 0..kappa+2. Upper cuts only exist for |L_C| > kappa, the only
    // case separation ever generates them in.
    for (int kappa : {1, 2}) {
        for (int n_ex = 0; n_ex <= 3; ++n_ex)
            for (int n_in = 0; n_in <= 3; ++n_in)
                for (int n_bl = 1; n_bl <= 3; ++n_bl)
                    for (int n_ld = 0; n_ld <= kappa + 2; ++n_ld) {
                        const int bits = n_ex + n_in + n_bl + n_ld;
                        for (unsigned m = 0; m < (1u << bits); ++m) {
                            int pos = 0;
                            auto bit = [&](int i) { return (m >> i) & 1u; };
                            int sum_ex = 0, sum_in = 0, sum_bl = 0, sum_ld = 0;
                            for (int i = 0; i < n_ex; ++i) sum_ex += bit(pos++);
                            for (int i = 0; i < n_in; ++i) sum_in += bit(pos++);
                            for (int i = 0; i < n_bl; ++i) sum_bl += bit(pos++);
                            for (int i = 0; i < n_ld; ++i) sum_ld += bit(pos++);

                            int phi = (sum_ex == 0 && sum_in == n_in && sum_bl == n_bl) ? 1 : 0;
                            int n_c = n_ex + n_in + n_bl;
                            int N = (n_ex - sum_ex) + sum_in + sum_bl;

                            bool lb_linear = sum_ld >= N - n_c + 1;
                            bool lb_phi = sum_ld >= phi;
                            REQUIRE(lb_linear == lb_phi);

                            if (n_ld > kappa) {
                                int V = sum_ex + (n_in - sum_in) + (n_bl - sum_bl);
                                bool ub_linear = sum_ld <= kappa + (n_ld - kappa) * V;
                                bool ub_phi = sum_ld <= n_ld + (kappa - n_ld) * phi;
                                REQUIRE(ub_linear == ub_phi);
                            }
                        }
                    }
    }
}

TEST_CASE("cut deduplication keys are canonical") {
    auto p = simple_problem(3, {{0, 1}, {1, 2}, {0, 2}});
    auto [model, vars] = build_model(p, BuildMode::RelaxBoth);
    auto c = make_candidate(p, SwitchState{1, 1, 1}, {1, 1, 1}, {1});
    auto first = separate_cycles(p, vars, c);
    auto second = separate_cycles(p, vars, c);
    REQUIRE(first.size() == second.size());
    std::set<std::string> keys;
    for (const Cut& cut : first) keys.insert(cut.dedup_key());
    for (const Cut& cut : second) CHECK(keys.count(cut.dedup_key()) == 1);
}
