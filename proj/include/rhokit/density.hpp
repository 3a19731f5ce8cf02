#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rhokit/graph.hpp"
#include "rhokit/limits.hpp"

namespace rhokit {

// How a density or homomorphism count is evaluated. All methods compute the
// same polynomial; automatic picks the cheapest one the limits allow.
enum class DensityMethod {
    automatic,
    eliminate,     // vertex elimination along a greedy low-width order
    enumerate,     // backtracking over all block assignments
    multipartite,  // multiset sums, complete multipartite patterns only
};

// Number of edge-preserving maps V(pattern) -> V(target). The empty pattern
// has exactly one. Throws CapExceeded when no allowed method fits the limits
// and NumericError if the count does not fit in 64 bits.
std::uint64_t hom_count(const Graph& pattern, const Graph& target, DensityMethod method = DensityMethod::automatic,
                        const EngineLimits& limits = EngineLimits::defaults());

// t(G, W): sum over block assignments of the product of block masses and edge
// weights. Uses log-space accumulation whenever W has a positive factor below
// 1e-30. The result is clamped to [0, 1].
double density(const Graph& pattern, const WeightedGraph& target, DensityMethod method = DensityMethod::automatic,
               const EngineLimits& limits = EngineLimits::defaults());

// log t(G, W), computed in log space when the plain value would underflow.
// Returns -infinity when the density is exactly zero.
double log_density(const Graph& pattern, const WeightedGraph& target, DensityMethod method = DensityMethod::automatic,
                   const EngineLimits& limits = EngineLimits::defaults());

// Eigenvalues of D^{1/2} W D^{1/2}, D = diag(masses), in ascending order.
struct Spectrum {
    std::vector<double> eigenvalues;
};

Spectrum spectrum(const WeightedGraph& target);

// Sum of lambda_i^k over the spectrum; equals t(C_k, W) for k >= 3.
double cycle_density_spectral(int k, const WeightedGraph& target);

// Mass of the common weighted neighbourhood of a multiset of blocks:
// sum_u mu_u prod_{v in S} W(v, u).
double common_neighborhood_mass(std::span<const int> blocks, const WeightedGraph& target);

// t(K_{n,x}, W) for real x >= 0: sum over n-tuples of blocks of the product
// of their masses times (common neighbourhood mass)^x, with 0^0 = 1.
double generalized_star_density(int n, double x, const WeightedGraph& target,
                                const EngineLimits& limits = EngineLimits::defaults());

// Walks v_0..v_r weighted by masses and edge weights, times d(v_0)^alpha *
// d(v_r)^beta where d is the degree mass. alpha = beta = 0 gives t(P_r, W).
double generalized_path_density(double alpha, int r, double beta, const WeightedGraph& target);

// max over vertex subsets S (including the empty set) of |S| - i |N(S)|.
int delta_index(const Graph& graph, int i, const EngineLimits& limits = EngineLimits::defaults());

int independence_number(const Graph& graph);

// Part sizes (nonincreasing) if the graph is complete multipartite with at
// least two parts, i.e. non-adjacency is an equivalence relation.
std::optional<std::vector<int>> complete_multipartite_parts(const Graph& graph);

// Width of the greedy (min-degree) elimination order of the whole graph.
int elimination_width(const Graph& graph);

}  // namespace rhokit
