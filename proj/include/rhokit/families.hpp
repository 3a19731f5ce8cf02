#pragma once

#include <span>
#include <string_view>

#include "rhokit/graph.hpp"

namespace rhokit {

enum class Family { path, cycle, complete, star, multipartite, hub, cycle_tail };

std::string_view to_string(Family family);

// Canonical vertex numbering, per family:
//   path(m)          P_m: vertices 0..m, edges (i, i+1).
//   cycle(m)         C_m: vertices 0..m-1, edges (i, i+1 mod m).
//   complete(n)      K_n: vertices 0..n-1.
//   star(t)          K_{1,t}: centre 0, leaves 1..t.
//   multipartite(a)  K_{a1,...}: parts laid out consecutively in the given
//                    order; zero parts are dropped.
//   hub(a)           K'_{a1..an}: clique 0..n-1, then a_1 vertices joined to
//                    every clique vertex except 0, then a_2 vertices joined
//                    to all but 1, and so on.
//   cycle_tail(k,l)  G_{k,l}: cycle 0..2k, tail 2k+1..2k+l hanging off
//                    vertex 0 as the path 0, 2k+1, ..., 2k+l.
// Throws DomainError when parameters are out of range.
Graph standard_graph(Family family, std::span<const int> params);

Graph path_graph(int edges);
Graph cycle_graph(int length);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph complete_multipartite(std::span<const int> parts);
Graph hub_graph(std::span<const int> pendant_counts);
Graph cycle_tail_graph(int k, int tail);
// Triangle 0,1,2 with pendant vertex 3 on vertex 0.
Graph paw_graph();

// Vertex v_ij (j < b_i) gets index b_0 + ... + b_{i-1} + j.
Graph blowup(const Graph& graph, std::span<const int> multiplicities);

Graph disjoint_union(const Graph& first, const Graph& second);
Graph disjoint_copies(const Graph& graph, int copies);

}  // namespace rhokit
