#pragma once

#include <vector>

#include "rhokit/graph.hpp"
#include "rhokit/limits.hpp"

namespace rhokit {

// Partial derivatives of t(G, W) treating each unordered weight pair {i, j}
// and each mass as an independent variable.
struct DensityGradient {
    double value = 0;             // t(G, W)
    std::vector<double> weights;  // row-major, symmetric; entry (i, j) = d t / d W_{ij}
    std::vector<double> masses;   // d t / d mu_i
};

// Computed by pinning: for weights, the marginal of G minus an edge over
// that edge's endpoints; for masses, the marginal of a vertex with its mass
// factor removed. No division by the variable being differentiated.
DensityGradient density_gradient(const Graph& pattern, const WeightedGraph& target,
                                 const EngineLimits& limits = EngineLimits::defaults());

}  // namespace rhokit
