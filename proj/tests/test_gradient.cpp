#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "rhokit/families.hpp"
#include "rhokit/gradient.hpp"
#include "rhokit/sampling.hpp"

using namespace rhokit;

TEST_CASE("edge gradient on a uniform two-block graphon") {
    const WeightedGraph w({0.5, 0.5}, {0.3, 0.6, 0.6, 0.9});
    const DensityGradient g = density_gradient(path_graph(1), w);
    CHECK(g.value == doctest::Approx((0.3 + 2 * 0.6 + 0.9) / 4));
    CHECK(g.weights[0] == doctest::Approx(0.25));
    CHECK(g.weights[1] == doctest::Approx(0.5));
    CHECK(g.weights[2] == doctest::Approx(0.5));
    CHECK(g.weights[3] == doctest::Approx(0.25));
}

TEST_CASE("edgeless patterns have zero weight gradient") {
    const WeightedGraph w = sample_weighted_graph(Profile::uniform, 3, 2);
    const DensityGradient g = density_gradient(Graph(3), w);
    for (double x : g.weights) CHECK(x == 0.0);
    // t = (sum mu)^3 with masses free
    for (double x : g.masses) CHECK(x == doctest::Approx(3.0));
}

// Perturbs one unordered weight pair (or one mass) without renormalising.
double perturbed(const Graph& g, const WeightedGraph& w, int i, int j, bool mass, double h) {
    std::vector<double> masses(w.masses().begin(), w.masses().end());
    std::vector<double> weights(w.weights().begin(), w.weights().end());
    const auto k = static_cast<std::size_t>(w.block_count());
    double total = 0;
    if (mass) {
        masses[static_cast<std::size_t>(i)] += h;
    } else {
        weights[static_cast<std::size_t>(i) * k + static_cast<std::size_t>(j)] += h;
        if (i != j) weights[static_cast<std::size_t>(j) * k + static_cast<std::size_t>(i)] += h;
    }
    // evaluate the raw polynomial: the validated type insists on the simplex
    const int n = g.vertex_count();
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    while (true) {
        double term = 1;
        for (int v = 0; v < n; ++v) term *= masses[static_cast<std::size_t>(a[static_cast<std::size_t>(v)])];
        for (auto [u, v] : g.edges())
            term *= weights[static_cast<std::size_t>(a[static_cast<std::size_t>(u)]) * k +
                            static_cast<std::size_t>(a[static_cast<std::size_t>(v)])];
        total += term;
        int p = 0;
        while (p < n && ++a[static_cast<std::size_t>(p)] == static_cast<int>(k)) a[static_cast<std::size_t>(p++)] = 0;
        if (p == n) break;
    }
    return total;
}

TEST_CASE("gradient matches central differences") {
    Rng rng(77);
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.integer(2, 5);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.coin(0.6)) edges.emplace_back(u, v);
        const Graph g(n, edges);
        const WeightedGraph w = sample_weighted_graph(kAllProfiles[trial % 5], rng.integer(2, 4), rng.next());
        const DensityGradient grad = density_gradient(g, w);
        CHECK(grad.value == doctest::Approx(oracle::density(g, w)));
        const int k = w.block_count();
        const double h = 1e-6;
        for (int i = 0; i < k; ++i) {
            for (int j = i; j < k; ++j) {
                const double fd = (perturbed(g, w, i, j, false, h) - perturbed(g, w, i, j, false, -h)) / (2 * h);
                const double an = grad.weights[static_cast<std::size_t>(i * k + j)];
                worst = std::max(worst, std::abs(fd - an) / std::max(1.0, std::abs(an)));
            }
            const double fd = (perturbed(g, w, i, i, true, h) - perturbed(g, w, i, i, true, -h)) / (2 * h);
            worst = std::max(worst, std::abs(fd - grad.masses[static_cast<std::size_t>(i)]) /
                                        std::max(1.0, std::abs(grad.masses[static_cast<std::size_t>(i)])));
        }
    }
    CHECK(worst <= 1e-5);
}
