#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rhokit/graph.hpp"

namespace rhokit {

// One inequality family each; the residual is oriented so that >= 0 passes.
enum class Suite {
    holder,                 // multiplicity convexity and the K_{a,b} centre step
    path_interpolation,     // t(P_x)^a t(P_y)^b >= t(P_z)^{a+b}, x, y even
    blakely_roy_gen,        // t(P_{0,r,beta}) >= t(P_1)^{r+beta}
    cycle_tail,             // t(G_{k,l}) >= t(C_{2k+1})^{1 + ceil(l/k)/2}
    shearer_star,           // t(K_{c,bc/a}) <= t(K_{a,b})^{c/a}
    spectral_lp,            // t(C_2n) >= t(C_m)^{2n/m}, m > 2n
    kruskal_katona,         // t(K_t) >= t(K_s)^{t/s}
    hub,                    // t(K'_a) >= t(K_n)^{1 + |a|}
    majorization_monotone,  // t(K_a) >= t(K_b) for a majorizing b
    star_tree,              // t(K_{1,t}) >= t(G)^{t/(|V|-1)}, G connected, |V| <= t+1
    delta_star,             // t(K_2) >= t(G)^{2/(|V| - delta_1)}
    cycle_path,             // cycle versus path exponents
    bipartite_cases,        // the five closed complete bipartite cases
    odd_cycle_bounds,       // upper bounds for C_k vs C_2n and odd cycles
    catalog_upper,          // every exact catalog value
};

const std::vector<Suite>& all_suites();
std::string_view to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);

// log t(H, W) - c log t(G, W). Throws DomainError when t(G, W) = 0; returns
// -infinity when t(H, W) = 0 < t(G, W) < 1.
double domination_residual(const Graph& g, const Graph& h, double c, const WeightedGraph& w);

struct SuiteFailure {
    int trial = 0;
    std::uint64_t seed = 0;
    std::string instance;
    double residual = 0;
};

struct SuiteReport {
    std::string suite;
    int trials = 0;
    int skipped = 0;  // t(G, W) = 0: the inequality says nothing
    std::vector<SuiteFailure> failures;  // sorted by trial
    std::optional<double> min_residual;
};

struct SuiteOptions {
    int jobs = 1;
    // catalog_upper only: test this single (G, H) spec pair.
    std::optional<std::pair<std::string, std::string>> catalog_pair;
};

// Trial i uses profile i mod 5, block count 2 + (i / 5) mod 4 and a stream
// derived from (seed, i), so reports do not depend on `jobs`.
SuiteReport run_suite(Suite suite, int trials, std::uint64_t seed, const SuiteOptions& options = {});

}  // namespace rhokit
