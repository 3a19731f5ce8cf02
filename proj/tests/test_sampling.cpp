#include <doctest.h>

#include "rhokit/density.hpp"
#include "rhokit/error.hpp"
#include "rhokit/families.hpp"
#include "rhokit/sampling.hpp"

using namespace rhokit;

TEST_CASE("sampling is deterministic") {
    for (Profile p : kAllProfiles)
        for (int size = 1; size <= 8; ++size) CHECK(sample_weighted_graph(p, size, 42) == sample_weighted_graph(p, size, 42));
    CHECK_FALSE(sample_weighted_graph(Profile::uniform, 3, 1) == sample_weighted_graph(Profile::uniform, 3, 2));
    CHECK_THROWS_AS(sample_weighted_graph(Profile::uniform, 0, 1), DomainError);
    CHECK_THROWS_AS(sample_weighted_graph(Profile::uniform, 9, 1), DomainError);
}

TEST_CASE("profiles have their shape") {
    const WeightedGraph one = sample_weighted_graph(Profile::uniform, 1, 3);
    CHECK(one.block_count() == 1);
    CHECK(one.weight(0, 0) >= 0);
    CHECK(one.weight(0, 0) <= 1);
    const WeightedGraph sparse = sample_weighted_graph(Profile::sparse, 5, 3);
    for (double x : sparse.weights()) CHECK(x <= 0.1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const WeightedGraph bip = sample_weighted_graph(Profile::bipartiteish, 4, seed);
        CHECK(density(cycle_graph(5), bip) < 0.01);
        CHECK(density(cycle_graph(4), bip) > 0.01);
    }
}

TEST_CASE("split and jitter") {
    const WeightedGraph w({0.3, 0.7}, {1, 0.2, 0.2, 0.5});
    const WeightedGraph s = split_to_size(w, 4);
    CHECK(s.block_count() == 4);
    CHECK(density(cycle_graph(5), s) == doctest::Approx(density(cycle_graph(5), w)));
    Rng rng(1);
    const WeightedGraph j = jitter(w, 0.05, rng);
    CHECK(j.block_count() == 2);
    CHECK(std::abs(j.weight(0, 1) - 0.2) <= 0.05 + 1e-12);
}

TEST_CASE("rng streams") {
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 5) == derive_seed(1, 5));
    Rng a(9), b(9);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    Rng c(3);
    for (int i = 0; i < 1000; ++i) {
        const int x = c.integer(-2, 4);
        CHECK(x >= -2);
        CHECK(x <= 4);
        const double u = c.uniform();
        CHECK(u >= 0);
        CHECK(u < 1);
    }
    CHECK(parse_profile("threshold") == Profile::threshold);
    CHECK_FALSE(parse_profile("gaussian"));
}
