#include "rhokit/gradient.hpp"

#include "elimination.hpp"
#include "rhokit/density.hpp"

namespace rhokit {

namespace {

detail::SumProduct<double> plain_polynomial(const WeightedGraph& w) {
    detail::SumProduct<double> p;
    p.blocks = w.block_count();
    p.unary.assign(w.masses().begin(), w.masses().end());
    p.binary.assign(w.weights().begin(), w.weights().end());
    return p;
}

detail::Factor<double> marginal(const Graph& g, const detail::SumProduct<double>& p, std::span<const Vertex> keep,
                                const EngineLimits& limits) {
    detail::EliminationPlan plan;
    const auto strategy =
        detail::choose_strategy(g, p.blocks, keep, DensityMethod::automatic, limits, false, plan);
    return detail::run(g, p, keep, strategy, plan);
}

}  // namespace

DensityGradient density_gradient(const Graph& pattern, const WeightedGraph& target, const EngineLimits& limits) {
    const int k = target.block_count();
    const auto ku = static_cast<std::size_t>(k);
    DensityGradient out;
    out.weights.assign(ku * ku, 0.0);
    out.masses.assign(ku, 0.0);
    auto p = plain_polynomial(target);
    out.value = marginal(pattern, p, {}, limits).table.at(0);

    for (std::size_t e = 0; e < pattern.edges().size(); ++e) {
        const auto [u, v] = pattern.edges()[e];
        const Graph rest = pattern.without_edge(e);
        const Vertex keep[] = {u, v};
        const auto table = marginal(rest, p, keep, limits).table;
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                // table index: digit of u has stride 1, digit of v has stride k
                const double pinned = table[static_cast<std::size_t>(i + j * k)];
                if (i == j) {
                    out.weights[static_cast<std::size_t>(i * k + i)] += pinned;
                } else {
                    out.weights[static_cast<std::size_t>(i * k + j)] += pinned;
                    out.weights[static_cast<std::size_t>(j * k + i)] += pinned;
                }
            }
        }
    }

    for (Vertex v = 0; v < pattern.vertex_count(); ++v) {
        auto bare = p;
        bare.bare.assign(static_cast<std::size_t>(pattern.vertex_count()), 0);
        bare.bare[static_cast<std::size_t>(v)] = 1;
        const Vertex keep[] = {v};
        const auto table = marginal(pattern, bare, keep, limits).table;
        for (std::size_t i = 0; i < ku; ++i) out.masses[i] += table[i];
    }
    return out;
}

}  // namespace rhokit
