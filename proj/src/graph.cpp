#include "rhokit/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "rhokit/error.hpp"

namespace rhokit {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw DomainError("negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
            throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for " +
                              std::to_string(vertex_count_) + " vertices");
        }
        if (u == v) throw DomainError("loop at vertex " + std::to_string(u) + " in a pattern graph");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw DomainError("duplicate edge in a simple graph");
    }
    adjacency_.resize(static_cast<std::size_t>(vertex_count_));
    for (const auto& [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
    if (vertex_count_ > 64) throw CapExceeded("bitmask operations need at most 64 vertices");
    std::uint64_t mask = 0;
    for (Vertex w : neighbors(v)) mask |= std::uint64_t{1} << w;
    return mask;
}

bool Graph::connected() const {
    if (vertex_count_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count_;
}

int Graph::non_isolated_count() const {
    int count = 0;
    for (Vertex v = 0; v < vertex_count_; ++v) {
        if (degree(v) > 0) ++count;
    }
    return count;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != vertex_count_) throw DomainError("permutation length mismatch");
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (const auto& [u, v] : edges_) {
        mapped.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    }
    return Graph(vertex_count_, std::move(mapped));
}

Graph Graph::without_edge(std::size_t edge_index) const {
    std::vector<Edge> rest;
    rest.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i != edge_index) rest.push_back(edges_[i]);
    }
    return Graph(vertex_count_, std::move(rest));
}

WeightedGraph::WeightedGraph(std::vector<double> masses, std::vector<double> weights)
    : masses_(std::move(masses)), weights_(std::move(weights)) {
    const std::size_t k = masses_.size();
    if (k == 0) throw DomainError("weighted graph needs at least one block");
    if (weights_.size() != k * k) throw DomainError("weight matrix must be block_count x block_count");
    double total = 0.0;
    for (double m : masses_) {
        if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("block masses must be positive and finite");
        total += m;
    }
    if (std::abs(total - 1.0) > 1e-12) throw DomainError("block masses must sum to 1");
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            double w = weights_[i * k + j];
            if (!(w >= 0.0 && w <= 1.0)) throw DomainError("weights must lie in [0, 1]");
            if (w != weights_[j * k + i]) throw DomainError("weight matrix must be symmetric");
        }
    }
}

WeightedGraph WeightedGraph::normalized(std::vector<double> masses, std::vector<double> weights) {
    double total = 0.0;
    for (double m : masses) {
        if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("block masses must be positive and finite");
        total += m;
    }
    for (double& m : masses) m /= total;
    // Push any rounding residue onto the largest block.
    double sum = std::accumulate(masses.begin(), masses.end(), 0.0);
    auto largest = std::max_element(masses.begin(), masses.end());
    *largest += 1.0 - sum;
    return WeightedGraph(std::move(masses), std::move(weights));
}

WeightedGraph WeightedGraph::from_graph(const Graph& graph) {
    const int n = graph.vertex_count();
    if (n == 0) throw DomainError("target graph needs at least one vertex");
    std::vector<double> masses(static_cast<std::size_t>(n), 1.0 / n);
    std::vector<double> weights(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (const auto& [u, v] : graph.edges()) {
        weights[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] = 1.0;
        weights[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(u)] = 1.0;
    }
    // 1/n summed n times stays within the 1e-12 mass tolerance; keeping every
    // mass exactly 1/n makes density * n^|V(G)| reproduce hom counts.
    return WeightedGraph(std::move(masses), std::move(weights));
}

double WeightedGraph::smallest_positive_factor() const noexcept {
    double smallest = std::numeric_limits<double>::infinity();
    for (double m : masses_) smallest = std::min(smallest, m);
    for (double w : weights_) {
        if (w > 0.0) smallest = std::min(smallest, w);
    }
    return smallest;
}

}  // namespace rhokit
