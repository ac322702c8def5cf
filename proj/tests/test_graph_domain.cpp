#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ncc/graph_domain.hpp"
#include "support.hpp"

using namespace ncc;
using testsupport::make_domain;

TEST_CASE("include_vertex promotes U and is idempotent on T") {
    GraphDomain g = make_domain("TTU");
    DomainDelta d = g.include_vertex(2);
    CHECK(d.vertices_to_T == std::vector<int>{2});
    CHECK(g.vertex_state(2) == ElementState::Mandatory);

    CHECK(g.include_vertex(2).empty());

    GraphDomain h = make_domain("TTF");
    CHECK_THROWS_AS(h.include_vertex(2), inconsistency_error);
}

TEST_CASE("exclude_vertex cascades to incident possible arcs") {
    GraphDomain g = make_domain("UUU", {{0, 1, 'U'}, {0, 2, 'U'}, {1, 2, 'U'}});
    DomainDelta d = g.exclude_vertex(0);
    CHECK(d.vertices_to_F == std::vector<int>{0});
    CHECK(d.arcs_to_F == std::vector<int>{0, 1});
    CHECK(g.arc(0).state == ElementState::Excluded);
    CHECK(g.arc(1).state == ElementState::Excluded);
    CHECK(g.arc(2).state == ElementState::Possible);
    g.check_invariants();

    CHECK(g.exclude_vertex(0).empty());

    GraphDomain h = make_domain("T");
    CHECK_THROWS_AS(h.exclude_vertex(0), inconsistency_error);
}

TEST_CASE("include_arc promotes both endpoints") {
    GraphDomain g = make_domain("UU", {{0, 1, 'U'}});
    DomainDelta d = g.include_arc(0);
    CHECK(d.arcs_to_T == std::vector<int>{0});
    CHECK(d.vertices_to_T == std::vector<int>{0, 1});
    g.check_invariants();

    CHECK(g.include_arc(0).empty());

    GraphDomain h = make_domain("UU", {{0, 1, 'U'}});
    h.exclude_arc(0);
    CHECK_THROWS_AS(h.include_arc(0), inconsistency_error);
}

TEST_CASE("exclude_arc leaves endpoints alone") {
    GraphDomain g = make_domain("TU", {{0, 1, 'U'}});
    DomainDelta d = g.exclude_arc(0);
    CHECK(d.arcs_to_F == std::vector<int>{0});
    CHECK(g.vertex_state(1) == ElementState::Possible);
    CHECK(g.exclude_arc(0).empty());

    GraphDomain h = make_domain("TT", {{0, 1, 'T'}});
    CHECK_THROWS_AS(h.exclude_arc(0), inconsistency_error);
}

TEST_CASE("counts") {
    GraphDomain empty(0);
    DomainCounts c0 = empty.counts();
    CHECK(c0.vt == 0);
    CHECK(c0.vtu == 0);
    CHECK(c0.etu == 0);

    GraphDomain g = make_domain("TUF", {{0, 1, 'U'}});
    DomainCounts c = g.counts();
    CHECK(std::tuple(c.vt, c.vu, c.vtu, c.et, c.eu, c.etu) == std::tuple(1, 1, 2, 0, 1, 1));

    GraphDomain h = make_domain("TT", {{0, 1, 'T'}});
    DomainCounts ch = h.counts();
    CHECK(std::tuple(ch.vt, ch.vu, ch.vtu, ch.et, ch.eu, ch.etu) == std::tuple(2, 0, 2, 1, 0, 1));
}

TEST_CASE("snapshot and restore round-trip") {
    GraphDomain g = make_domain("UUU", {{0, 1, 'U'}, {1, 2, 'U'}});
    Snapshot s = g.snapshot();
    GraphDomain reference = g;

    g.restore(s);
    CHECK(g.state_equal(reference));

    g.include_vertex(0);
    g.exclude_vertex(2);
    CHECK_FALSE(g.state_equal(reference));
    g.restore(s);
    CHECK(g.state_equal(reference));

    GraphDomain other = make_domain("UU");
    CHECK_THROWS_AS(other.restore(s), std::invalid_argument);
}

TEST_CASE("is_instantiated") {
    CHECK(GraphDomain(0).is_instantiated());
    CHECK(make_domain("TF").is_instantiated());
    CHECK_FALSE(make_domain("TU").is_instantiated());
    CHECK_FALSE(make_domain("TT", {{0, 1, 'U'}}).is_instantiated());
}

TEST_CASE("construction rejects parallel arcs and closure violations") {
    GraphDomain g = make_domain("TTU");
    g.add_arc(0, 1, ElementState::Mandatory);
    CHECK_THROWS_AS(g.add_arc(1, 0, ElementState::Possible), std::invalid_argument);
    g.add_arc(1, 1, ElementState::Mandatory);
    CHECK_THROWS_AS(g.add_arc(1, 1, ElementState::Possible), std::invalid_argument);
    CHECK_THROWS_AS(g.add_arc(0, 2, ElementState::Mandatory), std::invalid_argument);

    GraphDomain h = make_domain("TF");
    CHECK_THROWS_AS(h.add_arc(0, 1, ElementState::Possible), std::invalid_argument);
}

TEST_CASE("random mutation sequences keep invariants, monotone, snapshot-exact") {
    std::mt19937 rng(20240811);
    for (int round = 0; round < 200; ++round) {
        GraphDomain g = testsupport::random_domain(6, rng());
        g.check_invariants();
        Snapshot start = g.snapshot();
        GraphDomain reference = g;

        int t_before = g.counts().vt + g.counts().et;
        for (int step = 0; step < 12; ++step) {
            int pick = static_cast<int>(rng() % 4);
            int v = g.vertex_count() ? static_cast<int>(rng() % g.vertex_count()) : -1;
            int a = g.arc_count() ? static_cast<int>(rng() % g.arc_count()) : -1;
            try {
                if (pick == 0 && v >= 0) g.include_vertex(v);
                else if (pick == 1 && v >= 0) g.exclude_vertex(v);
                else if (pick == 2 && a >= 0) g.include_arc(a);
                else if (pick == 3 && a >= 0) g.exclude_arc(a);
            } catch (const inconsistency_error&) {
                // attempted to flip a decided element; domain must be unharmed
            }
            g.check_invariants();
            DomainCounts c = g.counts();
            int t_now = c.vt + c.et;
            CHECK(t_now >= t_before);
            t_before = t_now;
        }
        g.restore(start);
        CHECK(g.state_equal(reference));
    }
}

TEST_CASE("closure is minimal") {
    // exclude_vertex touches only the vertex and its incident U-arcs
    GraphDomain g = make_domain("UUUU", {{0, 1, 'U'}, {2, 3, 'U'}});
    DomainDelta d = g.exclude_vertex(0);
    CHECK(d.vertices_to_F == std::vector<int>{0});
    CHECK(d.arcs_to_F == std::vector<int>{0});
    CHECK(d.vertices_to_T.empty());

    // include_arc touches only the arc and its two endpoints
    GraphDomain h = make_domain("UUUU", {{0, 1, 'U'}, {2, 3, 'U'}});
    DomainDelta e = h.include_arc(0);
    CHECK(e.arcs_to_T == std::vector<int>{0});
    CHECK(e.vertices_to_T == std::vector<int>{0, 1});
    CHECK(h.vertex_state(2) == ElementState::Possible);
    CHECK(h.arc(1).state == ElementState::Possible);
}
