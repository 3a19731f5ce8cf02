#include <doctest.h>

#include <cmath>

#include "rhokit/constructions.hpp"
#include "rhokit/density.hpp"
#include "rhokit/error.hpp"
#include "rhokit/families.hpp"
#include "rhokit/graph_spec.hpp"
#include "rhokit/search.hpp"

using namespace rhokit;

TEST_CASE("ratio objective") {
    const WeightedGraph half({1.0}, {0.5});
    CHECK(ratio_objective(paw_graph(), cycle_graph(4), half) == doctest::Approx(1.0));
    const WeightedGraph cliques = build_construction(parse_family("two_clique"), 2);
    CHECK(ratio_objective(cycle_graph(3), cycle_graph(4), cliques) == doctest::Approx(1.5));
    CHECK_THROWS_AS(ratio_objective(path_graph(1), path_graph(2), WeightedGraph({1.0}, {1.0})), DomainError);
    CHECK_THROWS_AS(ratio_objective(cycle_graph(3), path_graph(1), WeightedGraph::from_graph(cycle_graph(4))),
                    DomainError);
}

TEST_CASE("config validation") {
    SearchConfig c;
    CHECK_NOTHROW(c.validate());
    c.epsilon = 0.5;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = {};
    c.blocks = {};
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = {};
    c.restarts = 0;
    CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("small search stays feasible and below the catalog") {
    SearchConfig c;
    c.blocks = {2, 3};
    c.restarts = 4;
    c.iterations = 30;
    const SearchResult r = search_lower_bound(cycle_graph(3), cycle_graph(4), c);
    CHECK(r.best_ratio >= 1.49);
    CHECK(r.best_ratio <= 1.6 + 1e-6);
    CHECK(r.traces.size() == 8);
    CHECK(density(cycle_graph(3), r.best) <= 1 - c.epsilon);
    double best = 0;
    for (const auto& t : r.traces)
        if (t.ratio) best = std::max(best, *t.ratio);
    CHECK(best == r.best_ratio);
    REQUIRE(r.catalog_upper);
    CHECK(*r.catalog_upper == Rational(8, 5));
}

TEST_CASE("search is deterministic") {
    SearchConfig c;
    c.blocks = {2};
    c.restarts = 3;
    c.iterations = 15;
    c.seed = 5;
    const SearchResult a = search_lower_bound(path_graph(2), path_graph(1), c);
    const SearchResult b = search_lower_bound(path_graph(2), path_graph(1), c);
    CHECK(a.best_ratio == b.best_ratio);
    CHECK(a.best == b.best);
    c.jobs = 2;
    const SearchResult d = search_lower_bound(path_graph(2), path_graph(1), c);
    CHECK(a.best_ratio == d.best_ratio);
}

TEST_CASE("search refuses infinite pairs") {
    CHECK_THROWS_AS(search_lower_bound(path_graph(1), cycle_graph(3)), DomainError);
}
