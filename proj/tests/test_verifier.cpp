#include <doctest.h>

#include <cmath>

#include "rhokit/error.hpp"
#include "rhokit/families.hpp"
#include "rhokit/sampling.hpp"
#include "rhokit/verifier.hpp"

using namespace rhokit;

TEST_CASE("domination residual") {
    const WeightedGraph half({1.0}, {0.5});
    const double expected = std::log(std::pow(2.0, -4)) - 4.0 / 3 * std::log(std::pow(2.0, -4));
    CHECK(domination_residual(paw_graph(), cycle_graph(4), 4.0 / 3, half) == doctest::Approx(expected));
    CHECK(expected > 0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const WeightedGraph w = sample_weighted_graph(kAllProfiles[seed % 5], 3, seed);
        CHECK(domination_residual(path_graph(1), path_graph(2), 2, w) >= -1e-12);
        CHECK(domination_residual(cycle_graph(5), cycle_graph(5), 1, w) == 0.0);
    }
    const WeightedGraph bip = WeightedGraph::from_graph(cycle_graph(4));
    CHECK_THROWS_AS(domination_residual(cycle_graph(3), path_graph(1), 1, bip), DomainError);
    CHECK(domination_residual(path_graph(1), cycle_graph(3), 1, bip) == -INFINITY);
}

TEST_CASE("suite registry") {
    CHECK(all_suites().size() == 15);
    for (Suite s : all_suites()) CHECK(parse_suite(to_string(s)) == s);
    CHECK_FALSE(parse_suite("nonsense"));
}

TEST_CASE("every suite passes a short run") {
    for (Suite s : all_suites()) {
        CAPTURE(to_string(s));
        const SuiteReport r = run_suite(s, 40, 7);
        CHECK(r.failures.empty());
        CHECK(r.trials == 40);
        CHECK(r.skipped < r.trials);
    }
}

TEST_CASE("reports do not depend on the job count") {
    SuiteOptions two;
    two.jobs = 2;
    for (Suite s : {Suite::holder, Suite::catalog_upper}) {
        const SuiteReport a = run_suite(s, 30, 11);
        const SuiteReport b = run_suite(s, 30, 11, two);
        CHECK(a.skipped == b.skipped);
        REQUIRE(a.min_residual);
        CHECK(*a.min_residual == *b.min_residual);
    }
}

TEST_CASE("catalog pair (G, G) has zero residual") {
    SuiteOptions options;
    options.catalog_pair = std::pair<std::string, std::string>{"C5", "C5"};
    const SuiteReport r = run_suite(Suite::catalog_upper, 25, 3, options);
    CHECK(r.failures.empty());
    REQUIRE(r.min_residual);
    CHECK(*r.min_residual == 0.0);
}

TEST_CASE("a false exponent is caught") {
    // rho(P1, P2) = 2; claiming 1.5 must fail somewhere
    int failures = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const WeightedGraph w = sample_weighted_graph(Profile::uniform, 3, seed);
        if (domination_residual(path_graph(1), path_graph(2), 1.5, w) < -1e-9) ++failures;
    }
    CHECK(failures > 0);
}
