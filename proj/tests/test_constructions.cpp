#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "rhokit/constructions.hpp"
#include "rhokit/density.hpp"
#include "rhokit/error.hpp"
#include "rhokit/families.hpp"
#include "rhokit/graph_spec.hpp"

using namespace rhokit;

TEST_CASE("family parsing") {
    const ConstructionFamily f = parse_family("clique_pendant_star:3");
    CHECK(f.kind == ConstructionKind::clique_pendant_star);
    CHECK(f.params == std::vector<double>{3});
    CHECK(render(f) == "clique_pendant_star:3");
    CHECK(render(parse_family("two_clique")) == "two_clique");
    CHECK(render(parse_family("constant_p:0.25")) == "constant_p:0.25");
    CHECK_THROWS_AS(parse_family("nope"), ParseError);
    CHECK_THROWS_AS(parse_family("constant_p"), Error);
    CHECK_THROWS_AS(parse_family("constant_p:x"), ParseError);
    CHECK_THROWS_AS(build_construction(parse_family("constant_p:0"), 2), DomainError);
    CHECK_FALSE(uses_scale(ConstructionKind::two_clique));
    CHECK(uses_scale(ConstructionKind::paw_family));
}

TEST_CASE("closed form densities of the constructions") {
    const WeightedGraph half = build_construction(parse_family("half_block"), 2);
    CHECK(density(path_graph(3), half) == doctest::Approx(std::pow(0.5, 4)));
    const WeightedGraph cliques = build_construction(parse_family("two_clique"), 2);
    CHECK(density(path_graph(3), cliques) == doctest::Approx(std::pow(0.5, 3)));
    // looped star: one looped centre of mass 1/(n+1) joined to n leaves
    const double n = 50;
    const WeightedGraph star = build_construction(parse_family("looped_star"), n);
    CHECK(star.block_count() == 2);
    CHECK(density(path_graph(1), star) == doctest::Approx((1 + 2 * n) / ((n + 1) * (n + 1))));
    const WeightedGraph lv = build_construction(parse_family("looped_vertex"), n);
    CHECK(density(complete_graph(4), lv) == doctest::Approx(std::pow(1 / n, 4)));
    const WeightedGraph kp = build_construction(parse_family("kpartite_unbalanced:3,1"), 10);
    CHECK(density(complete_graph(3), kp) == doctest::Approx(6 * 10.0 / (12 * 12 * 12)));
}

TEST_CASE("the paw family matches the oracle") {
    for (double n : {4.0, 100.0, 1e4}) {
        const WeightedGraph w = build_construction(parse_family("paw_family"), n);
        CHECK(density(paw_graph(), w) == doctest::Approx(oracle::density(paw_graph(), w)).epsilon(1e-12));
        CHECK(density(cycle_graph(4), w) == doctest::Approx(oracle::density(cycle_graph(4), w)).epsilon(1e-12));
    }
}

TEST_CASE("certificates") {
    const auto two = certify_lower_bound(cycle_graph(3), cycle_graph(4), parse_family("two_clique"), {2}, 1.5);
    REQUIRE(two.achieved);
    CHECK(*two.achieved == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(std::abs(*two.gap) < 1e-12);

    const auto edges = certify_lower_bound(path_graph(1), path_graph(2), parse_family("constant_p:0.3"), {2}, 2);
    CHECK(*edges.achieved == doctest::Approx(2.0).epsilon(1e-12));

    // edge ratio only: K2 has a third of the edges of K3
    const auto k3 = certify_lower_bound(complete_graph(3), path_graph(1), parse_family("constant_p:0.5"), {2}, 2.0 / 3);
    CHECK(*k3.achieved == doctest::Approx(1.0 / 3).epsilon(1e-12));
    const auto k3v = certify_lower_bound(complete_graph(3), path_graph(1), parse_family("half_block"), {2}, 2.0 / 3);
    CHECK(*k3v.achieved == doctest::Approx(2.0 / 3).epsilon(1e-12));

    // constant_p at p = 1 is degenerate
    const auto flat = certify_lower_bound(path_graph(1), path_graph(2), parse_family("constant_p:1"), {2}, 2);
    CHECK_FALSE(flat.achieved);
    CHECK(flat.degenerate_scales == std::vector<double>{2});
}

TEST_CASE("the paw family approaches 4/3 slowly") {
    const auto r = certify_lower_bound(paw_graph(), cycle_graph(4), parse_family("paw_family"), {1e2, 1e4, 1e6}, 4.0 / 3);
    REQUIRE(r.schedule.size() == 3);
    CHECK(*r.schedule[0].ratio < *r.schedule[1].ratio);
    CHECK(*r.schedule[1].ratio < *r.schedule[2].ratio);
    CHECK(*r.schedule[2].ratio < 4.0 / 3);
}
