#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rhokit/graph.hpp"
#include "rhokit/graph_spec.hpp"
#include "rhokit/limits.hpp"
#include "rhokit/rational.hpp"

namespace rhokit {

struct SearchConfig {
    std::vector<int> blocks{2, 3, 4};
    int restarts = 6;      // per block count
    int iterations = 150;  // accepted ascent steps per restart, at most
    double step = 0.1;     // initial line-search step
    int halvings = 30;
    double epsilon = 1e-6;  // keeps t(G, W) <= 1 - epsilon
    std::uint64_t seed = 1;
    int jobs = 1;

    // Throws DomainError on empty or nonpositive counts, or epsilon outside (0, 0.5).
    void validate() const;
};

struct RestartTrace {
    int blocks = 0;
    std::string start;  // construction name or "random:<profile>"
    int iterations = 0;
    std::optional<double> ratio;  // absent when the start was degenerate
};

struct SearchResult {
    double best_ratio = 0;
    WeightedGraph best{{1.0}, {0.0}};
    std::vector<RestartTrace> traces;
    std::optional<Rational> catalog_lower;
    std::optional<Rational> catalog_upper;
};

// log t(H, W) / log t(G, W). Throws DomainError unless 0 < t(G, W) < 1.
double ratio_objective(const Graph& g, const Graph& h, const WeightedGraph& w,
                       const EngineLimits& limits = EngineLimits::defaults());

// Multi-start projected gradient ascent over step graphons. Throws
// DomainError when H has no homomorphism into G or every restart is
// degenerate, and DiscrepancyError if the best ratio beats the catalog upper
// bound by more than 1e-6.
SearchResult search_lower_bound(const Graph& g, const Graph& h, const SearchConfig& config = {},
                                const EngineLimits& limits = EngineLimits::defaults());
// Same, with the catalog bound looked up on the specs (so hub and copy rules apply).
SearchResult search_lower_bound(const GraphSpec& g, const GraphSpec& h, const SearchConfig& config = {},
                                const EngineLimits& limits = EngineLimits::defaults());

}  // namespace rhokit
