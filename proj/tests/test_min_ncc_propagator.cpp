#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ncc/oracle.hpp"
#include "ncc/propagators.hpp"
#include "ncc/verify.hpp"
#include "support.hpp"

using namespace ncc;
using testsupport::make_domain;

TEST_CASE("step 7 removes undersized optional components") {
    GraphDomain g = make_domain("TTU", {{0, 1, 'T'}});
    // oracle first: every solution with P in [2,3] omits vertex 2 and has
    // MIN_NCC = 2
    auto sols = oracle_solutions(g, {{ConstraintKind::MinNcc, {2, 3}}});
    REQUIRE(!sols.empty());
    for (const auto& s : sols) {
        CHECK(s.graph.vertices == std::vector<int>{0, 1});
        CHECK(s.p_values == std::vector<int>{2});
    }

    IntervalVar p{2, 3};
    FilterOutcome out = filter_min_ncc(g, p);
    CHECK(out.status == FilterStatus::Progressed);
    CHECK(g.vertex_state(2) == ElementState::Excluded);
    CHECK(out.graph_delta.vertices_to_F == std::vector<int>{2});
    CHECK(out.graph_delta.vertices_to_T.empty());
    CHECK(p == IntervalVar{2, 2});
}

TEST_CASE("step 8a forces a mandatory component of exactly lb vertices") {
    GraphDomain g = make_domain("TU", {{0, 1, 'U'}});
    auto sols = oracle_solutions(g, {{ConstraintKind::MinNcc, {2, 2}}});
    REQUIRE(!sols.empty());
    for (const auto& s : sols) CHECK(s.graph.vertices == std::vector<int>{0, 1});

    IntervalVar p{2, 2};
    FilterOutcome out = filter_min_ncc(g, p);
    CHECK(out.status == FilterStatus::Progressed);
    CHECK(out.graph_delta.vertices_to_T == std::vector<int>{1});
    CHECK(out.graph_delta.arcs_to_T.empty());
    CHECK(g.arc(0).state == ElementState::Possible);  // arc left to search
    CHECK(p == IntervalVar{2, 2});
}

TEST_CASE("step 8b forces the single exit of an undersized kernel component") {
    GraphDomain g = make_domain("TUU", {{0, 1, 'U'}, {1, 2, 'U'}});
    auto sols = oracle_solutions(g, {{ConstraintKind::MinNcc, {2, 3}}});
    REQUIRE(!sols.empty());
    for (const auto& s : sols)
        CHECK(std::find(s.graph.arcs.begin(), s.graph.arcs.end(), 0) != s.graph.arcs.end());

    IntervalVar p{2, 3};
    FilterOutcome out = filter_min_ncc(g, p);
    CHECK(out.status == FilterStatus::Progressed);
    CHECK(out.graph_delta.arcs_to_T == std::vector<int>{0});
    CHECK(out.graph_delta.vertices_to_T == std::vector<int>{1});
    CHECK(g.arc(1).state == ElementState::Possible);
    CHECK(g.vertex_state(2) == ElementState::Possible);
}

TEST_CASE("step 8b funnels several exits into a single possible vertex") {
    // kernel component {0,1} can only grow through vertex 2, via two arcs
    GraphDomain g = make_domain("TTUU", {{0, 1, 'T'}, {0, 2, 'U'}, {1, 2, 'U'}, {2, 3, 'U'}});
    auto sols = oracle_solutions(g, {{ConstraintKind::MinNcc, {3, 3}}});
    REQUIRE(!sols.empty());
    for (const auto& s : sols)
        CHECK(std::find(s.graph.vertices.begin(), s.graph.vertices.end(), 2) !=
              s.graph.vertices.end());

    IntervalVar p{3, 3};
    FilterOutcome out = filter_min_ncc(g, p);
    CHECK(out.status == FilterStatus::Progressed);
    CHECK(out.graph_delta.vertices_to_T == std::vector<int>{2});
    CHECK(out.graph_delta.arcs_to_T.empty());  // neither arc is forced alone
    CHECK(g.vertex_state(2) == ElementState::Mandatory);
}

TEST_CASE("trivial failures") {
    // one vertex cannot host a size-2 component
    GraphDomain g = make_domain("T");
    IntervalVar p{2, 2};
    FilterOutcome out = filter_min_ncc(g, p);
    CHECK(out.status == FilterStatus::Failed);
    CHECK(out.graph_delta.empty());
    CHECK(oracle_solutions(g, {{ConstraintKind::MinNcc, {2, 2}}}).empty());

    // a size-2 component needs an arc
    GraphDomain h = make_domain("TT");
    IntervalVar q{2, 2};
    CHECK(filter_min_ncc(h, q).status == FilterStatus::Failed);

    // a lone mandatory vertex with P = 1 is a solution, not a failure
    GraphDomain k = make_domain("T");
    IntervalVar r{1, 1};
    CHECK(filter_min_ncc(k, r).status == FilterStatus::AtFixpoint);
    REQUIRE(oracle_solutions(k, {{ConstraintKind::MinNcc, {1, 1}}}).size() == 1);
}

TEST_CASE("step 10a clears all possible vertices when ub is zero") {
    GraphDomain g = make_domain("UU", {{0, 1, 'U'}});
    IntervalVar p{0, 0};
    FilterOutcome out = filter_min_ncc(g, p);
    CHECK(out.status == FilterStatus::Progressed);
    CHECK(g.vertex_state(0) == ElementState::Excluded);
    CHECK(g.vertex_state(1) == ElementState::Excluded);
    CHECK(g.arc(0).state == ElementState::Excluded);
}

TEST_CASE("step 10b isolates the last possible vertex when ub is one") {
    GraphDomain g = make_domain("TTU", {{0, 1, 'T'}, {1, 2, 'U'}, {2, 2, 'U'}});
    auto sols = oracle_solutions(g, {{ConstraintKind::MinNcc, {0, 1}}});
    for (const auto& s : sols) {
        // no solution keeps the bridge arc
        CHECK(std::find(s.graph.arcs.begin(), s.graph.arcs.end(), 1) == s.graph.arcs.end());
    }
    IntervalVar p{0, 1};
    FilterOutcome out = filter_min_ncc(g, p);
    CHECK(out.status == FilterStatus::Progressed);
    CHECK(g.vertex_state(2) == ElementState::Mandatory);
    CHECK(g.arc(1).state == ElementState::Excluded);
    CHECK(g.arc(2).state == ElementState::Possible);  // the loop survives
}

TEST_CASE("no-op run reports fixpoint") {
    GraphDomain g = make_domain("TT", {{0, 1, 'T'}});
    IntervalVar p{2, 2};
    FilterOutcome out = filter_min_ncc(g, p);
    CHECK(out.status == FilterStatus::AtFixpoint);
    CHECK(!out.p_delta.has_value());
}

TEST_CASE("randomized soundness, failure correctness and contractance") {
    std::mt19937 rng(41);
    for (int round = 0; round < 400; ++round) {
        int n = 1 + static_cast<int>(rng() % 5);
        GraphDomain g = testsupport::random_domain(n, rng());
        int lb = static_cast<int>(rng() % (n + 2));
        int ub = lb + static_cast<int>(rng() % (n + 2 - lb));
        auto problem = audit_filter(g, ConstraintKind::MinNcc, {lb, ub});
        INFO(problem.value_or(""));
        CHECK(!problem.has_value());
    }
}

TEST_CASE("repeated runs from the same input are identical") {
    std::mt19937 rng(43);
    for (int round = 0; round < 100; ++round) {
        GraphDomain g0 = testsupport::random_domain(5, rng());
        IntervalVar p0{static_cast<int>(rng() % 3), 3 + static_cast<int>(rng() % 3)};

        GraphDomain a = g0, b = g0;
        IntervalVar pa = p0, pb = p0;
        FilterOutcome oa = filter_min_ncc(a, pa);
        FilterOutcome ob = filter_min_ncc(b, pb);
        CHECK(oa.status == ob.status);
        CHECK(a.state_equal(b));
        CHECK(pa == pb);
    }
}
