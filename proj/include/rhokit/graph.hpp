#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rhokit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple graph on vertices 0..n-1. Edges are stored once, as (u, v)
// with u < v, in lexicographic order. Isolated vertices are allowed.
class Graph {
public:
    Graph() = default;
    // Throws DomainError on loops, duplicate pairs or endpoints out of range.
    explicit Graph(int vertex_count, std::vector<Edge> edges = {});

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    // Bitmask of neighbours; only valid for graphs with at most 64 vertices.
    std::uint64_t neighbor_mask(Vertex v) const;

    bool empty() const noexcept { return edges_.empty(); }
    bool connected() const;
    int non_isolated_count() const;

    // Vertex v of this graph becomes vertex perm[v] of the result.
    Graph relabeled(std::span<const Vertex> perm) const;
    Graph without_edge(std::size_t edge_index) const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// Step graphon: blocks with positive masses summing to one and a symmetric
// matrix of weights in [0, 1]. Diagonal entries are loop weights.
class WeightedGraph {
public:
    // Throws DomainError unless masses are positive and sum to 1 within 1e-12,
    // and weights (row-major, block_count^2 entries) are symmetric and in [0, 1].
    WeightedGraph(std::vector<double> masses, std::vector<double> weights);

    // Rescales positive masses to sum to one, then validates.
    static WeightedGraph normalized(std::vector<double> masses, std::vector<double> weights);

    // Uniform masses and 0/1 adjacency weights of a graph on N >= 1 vertices.
    static WeightedGraph from_graph(const Graph& graph);

    int block_count() const noexcept { return static_cast<int>(masses_.size()); }
    double mass(int i) const { return masses_[static_cast<std::size_t>(i)]; }
    double weight(int i, int j) const {
        return weights_[static_cast<std::size_t>(i) * masses_.size() + static_cast<std::size_t>(j)];
    }
    std::span<const double> masses() const noexcept { return masses_; }
    std::span<const double> weights() const noexcept { return weights_; }

    // Smallest strictly positive mass or weight.
    double smallest_positive_factor() const noexcept;

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    std::vector<double> masses_;
    std::vector<double> weights_;
};

}  // namespace rhokit
