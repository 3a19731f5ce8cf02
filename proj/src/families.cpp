#include "rhokit/families.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "rhokit/error.hpp"

namespace rhokit {

std::string_view to_string(Family family) {
    switch (family) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::multipartite: return "multipartite";
    case Family::hub: return "hub";
    case Family::cycle_tail: return "cycle_tail";
    }
    return "?";
}

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) throw DomainError(message);
}

void require_count(std::span<const int> params, std::size_t count, std::string_view family) {
    require(params.size() == count, std::string(family) + " takes " + std::to_string(count) + " parameter(s)");
}

}  // namespace

Graph path_graph(int edges) {
    require(edges >= 1, "path needs at least one edge");
    std::vector<Edge> list;
    for (int i = 0; i < edges; ++i) list.emplace_back(i, i + 1);
    return Graph(edges + 1, std::move(list));
}

Graph cycle_graph(int length) {
    require(length >= 3, "cycle needs length at least 3");
    std::vector<Edge> list;
    for (int i = 0; i < length; ++i) list.emplace_back(i, (i + 1) % length);
    return Graph(length, std::move(list));
}

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs at least one vertex");
    std::vector<Edge> list;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) list.emplace_back(i, j);
    }
    return Graph(n, std::move(list));
}

Graph star_graph(int leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<Edge> list;
    for (int i = 1; i <= leaves; ++i) list.emplace_back(0, i);
    return Graph(leaves + 1, std::move(list));
}

Graph complete_multipartite(std::span<const int> parts) {
    std::vector<int> sizes;
    for (int p : parts) {
        require(p >= 0, "part sizes must be nonnegative");
        if (p > 0) sizes.push_back(p);
    }
    require(!sizes.empty(), "complete multipartite graph needs a positive part");
    std::vector<int> offset(sizes.size() + 1, 0);
    std::partial_sum(sizes.begin(), sizes.end(), offset.begin() + 1);
    std::vector<Edge> list;
    for (std::size_t a = 0; a < sizes.size(); ++a) {
        for (std::size_t b = a + 1; b < sizes.size(); ++b) {
            for (int u = offset[a]; u < offset[a + 1]; ++u) {
                for (int v = offset[b]; v < offset[b + 1]; ++v) list.emplace_back(u, v);
            }
        }
    }
    return Graph(offset.back(), std::move(list));
}

Graph hub_graph(std::span<const int> pendant_counts) {
    const int n = static_cast<int>(pendant_counts.size());
    require(n >= 1, "hub graph needs a central clique of size at least 1");
    std::vector<Edge> list;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) list.emplace_back(i, j);
    }
    int next = n;
    for (int i = 0; i < n; ++i) {
        require(pendant_counts[static_cast<std::size_t>(i)] >= 0, "hub pendant counts must be nonnegative");
        for (int c = 0; c < pendant_counts[static_cast<std::size_t>(i)]; ++c, ++next) {
            for (int j = 0; j < n; ++j) {
                if (j != i) list.emplace_back(j, next);
            }
        }
    }
    return Graph(next, std::move(list));
}

Graph cycle_tail_graph(int k, int tail) {
    require(k >= 1, "cycle_tail needs k >= 1");
    require(tail >= 0, "cycle_tail needs a nonnegative tail length");
    const int cycle = 2 * k + 1;
    std::vector<Edge> list;
    for (int i = 0; i < cycle; ++i) list.emplace_back(i, (i + 1) % cycle);
    int previous = 0;
    for (int i = 0; i < tail; ++i) {
        list.emplace_back(previous, cycle + i);
        previous = cycle + i;
    }
    return Graph(cycle + tail, std::move(list));
}

Graph paw_graph() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

Graph standard_graph(Family family, std::span<const int> params) {
    switch (family) {
    case Family::path: require_count(params, 1, "path"); return path_graph(params[0]);
    case Family::cycle: require_count(params, 1, "cycle"); return cycle_graph(params[0]);
    case Family::complete: require_count(params, 1, "complete"); return complete_graph(params[0]);
    case Family::star: require_count(params, 1, "star"); return star_graph(params[0]);
    case Family::multipartite: return complete_multipartite(params);
    case Family::hub: return hub_graph(params);
    case Family::cycle_tail: require_count(params, 2, "cycle_tail"); return cycle_tail_graph(params[0], params[1]);
    }
    throw DomainError("unknown graph family");
}

Graph blowup(const Graph& graph, std::span<const int> multiplicities) {
    const int n = graph.vertex_count();
    require(static_cast<int>(multiplicities.size()) == n, "blowup needs one multiplicity per vertex");
    std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        require(multiplicities[static_cast<std::size_t>(i)] >= 1, "blowup multiplicities must be positive");
        offset[static_cast<std::size_t>(i) + 1] = offset[static_cast<std::size_t>(i)] + multiplicities[static_cast<std::size_t>(i)];
    }
    std::vector<Edge> list;
    for (const auto& [u, v] : graph.edges()) {
        for (int a = offset[static_cast<std::size_t>(u)]; a < offset[static_cast<std::size_t>(u) + 1]; ++a) {
            for (int b = offset[static_cast<std::size_t>(v)]; b < offset[static_cast<std::size_t>(v) + 1]; ++b) {
                list.emplace_back(a, b);
            }
        }
    }
    return Graph(offset.back(), std::move(list));
}

Graph disjoint_union(const Graph& first, const Graph& second) {
    std::vector<Edge> list(first.edges().begin(), first.edges().end());
    const int shift = first.vertex_count();
    for (const auto& [u, v] : second.edges()) list.emplace_back(u + shift, v + shift);
    return Graph(first.vertex_count() + second.vertex_count(), std::move(list));
}

Graph disjoint_copies(const Graph& graph, int copies) {
    require(copies >= 1, "number of copies must be positive");
    Graph result = graph;
    for (int i = 1; i < copies; ++i) result = disjoint_union(result, graph);
    return result;
}

}  // namespace rhokit
