#include "rhokit/density.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "elimination.hpp"
#include "rhokit/error.hpp"

namespace rhokit {

namespace detail {

Strategy choose_strategy(const Graph& g, int blocks, std::span<const Vertex> keep, DensityMethod method,
                         const EngineLimits& limits, bool allow_multipartite, EliminationPlan& plan) {
    const double enumeration_size = power_count(blocks, g.vertex_count());
    auto enumerate_or_throw = [&]() {
        if (enumeration_size > limits.enumeration_cap)
            throw CapExceeded("enumeration needs " + std::to_string(blocks) + "^" + std::to_string(g.vertex_count()) +
                              " assignments, above the cap");
        return Strategy::enumerate;
    };
    switch (method) {
    case DensityMethod::enumerate:
        return enumerate_or_throw();
    case DensityMethod::multipartite:
        if (!allow_multipartite || !complete_multipartite_parts(g))
            throw DomainError("multipartite method needs a complete multipartite pattern");
        return Strategy::multipartite;
    case DensityMethod::eliminate:
        plan = plan_elimination(g, keep);
        if (power_count(blocks, plan.width + 1) > limits.enumeration_cap)
            throw CapExceeded("elimination tables exceed the cap");
        return Strategy::eliminate;
    case DensityMethod::automatic:
        break;
    }
    plan = plan_elimination(g, keep);
    if (plan.width <= limits.max_elimination_width) return Strategy::eliminate;
    if (allow_multipartite && keep.empty() && complete_multipartite_parts(g)) return Strategy::multipartite;
    return enumerate_or_throw();
}

}  // namespace detail

namespace {

using detail::LogReal;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

template <class S, class Convert>
detail::SumProduct<S> polynomial(const WeightedGraph& w, Convert convert) {
    detail::SumProduct<S> p;
    p.blocks = w.block_count();
    for (double m : w.masses()) p.unary.push_back(convert(m));
    for (double x : w.weights()) p.binary.push_back(convert(x));
    return p;
}

// Compositions of `total` into `blocks` nonnegative parts.
void compositions(int total, int blocks, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == blocks - 1) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int c = total; c >= 0; --c) {
        current.push_back(c);
        compositions(total - c, blocks, current, out);
        current.pop_back();
    }
}

// log t(K_{a_1..a_q}, W) by summing over the multiset of blocks each part uses.
double multipartite_log_density(std::span<const int> parts, const WeightedGraph& w, const EngineLimits& limits) {
    const int k = w.block_count();
    const auto ku = static_cast<std::size_t>(k);
    double leaves = 1;
    for (int a : parts) leaves *= std::exp(std::lgamma(a + k) - std::lgamma(a + 1) - std::lgamma(k));
    if (leaves > limits.enumeration_cap) throw CapExceeded("multipartite multiset sum exceeds the cap");

    std::vector<double> log_mass(ku);
    for (int i = 0; i < k; ++i) log_mass[static_cast<std::size_t>(i)] = std::log(w.mass(i));
    std::vector<double> log_weight(ku * ku);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            log_weight[static_cast<std::size_t>(i * k + j)] = w.weight(i, j) > 0 ? std::log(w.weight(i, j)) : kNegInf;

    struct Choice {
        std::vector<int> counts;
        double coefficient;       // log multinomial + log masses
        std::vector<double> out;  // log prod_x W(x, y)^{c_x}, per y
    };
    std::vector<std::vector<Choice>> choices;
    for (int a : parts) {
        std::vector<std::vector<int>> all;
        std::vector<int> scratch;
        compositions(a, k, scratch, all);
        std::vector<Choice> level;
        for (auto& c : all) {
            Choice choice{c, std::lgamma(a + 1.0), std::vector<double>(ku, 0.0)};
            for (int x = 0; x < k; ++x) {
                const int cx = c[static_cast<std::size_t>(x)];
                if (cx == 0) continue;
                choice.coefficient += cx * log_mass[static_cast<std::size_t>(x)] - std::lgamma(cx + 1.0);
                for (int y = 0; y < k; ++y)
                    choice.out[static_cast<std::size_t>(y)] += cx * log_weight[static_cast<std::size_t>(x * k + y)];
            }
            level.push_back(std::move(choice));
        }
        choices.push_back(std::move(level));
    }

    // Streaming log-sum-exp over the leaves.
    double top = kNegInf;
    double scaled = 0;
    auto add_leaf = [&](double value) {
        if (value == kNegInf) return;
        if (value > top) {
            scaled = scaled * std::exp(top - value) + 1.0;
            top = value;
        } else {
            scaled += std::exp(value - top);
        }
    };
    std::vector<std::vector<double>> incoming(parts.size() + 1, std::vector<double>(ku, 0.0));
    auto walk = [&](auto&& self, std::size_t level, double partial) -> void {
        if (level == parts.size()) {
            add_leaf(partial);
            return;
        }
        const auto& in = incoming[level];
        for (const Choice& c : choices[level]) {
            double value = partial + c.coefficient;
            for (std::size_t y = 0; y < ku && value != kNegInf; ++y)
                if (c.counts[y] > 0) value += c.counts[y] * in[y];
            if (value == kNegInf || std::isnan(value)) continue;
            auto& next = incoming[level + 1];
            for (std::size_t y = 0; y < ku; ++y) next[y] = in[y] + c.out[y];
            self(self, level + 1, value);
        }
    };
    walk(walk, 0, 0.0);
    return top == kNegInf ? kNegInf : top + std::log(scaled);
}

double log_total(const Graph& g, const WeightedGraph& w, detail::Strategy strategy, const detail::EliminationPlan& plan,
                 const EngineLimits& limits) {
    if (strategy == detail::Strategy::multipartite)
        return multipartite_log_density(*complete_multipartite_parts(g), w, limits);
    auto p = polynomial<LogReal>(w, [](double x) { return LogReal::from(x); });
    return detail::run(g, p, {}, strategy, plan).table.at(0).log;
}

double plain_total(const Graph& g, const WeightedGraph& w, detail::Strategy strategy,
                   const detail::EliminationPlan& plan) {
    auto p = polynomial<double>(w, [](double x) { return x; });
    return detail::run(g, p, {}, strategy, plan).table.at(0);
}

}  // namespace

std::uint64_t hom_count(const Graph& pattern, const Graph& target, DensityMethod method, const EngineLimits& limits) {
    if (pattern.vertex_count() == 0) return 1;
    const int k = target.vertex_count();
    if (k == 0) return 0;
    detail::EliminationPlan plan;
    const auto strategy = detail::choose_strategy(pattern, k, {}, method, limits, false, plan);
    detail::SumProduct<detail::CheckedCount> p;
    p.blocks = k;
    p.unary.assign(static_cast<std::size_t>(k), detail::CheckedCount::one());
    p.binary.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), detail::CheckedCount::zero());
    for (auto [u, v] : target.edges()) {
        p.binary[static_cast<std::size_t>(u * k + v)] = detail::CheckedCount::one();
        p.binary[static_cast<std::size_t>(v * k + u)] = detail::CheckedCount::one();
    }
    return detail::run(pattern, p, {}, strategy, plan).table.at(0).value;
}

double log_density(const Graph& pattern, const WeightedGraph& target, DensityMethod method,
                   const EngineLimits& limits) {
    if (pattern.vertex_count() == 0) return 0.0;
    detail::EliminationPlan plan;
    const auto strategy = detail::choose_strategy(pattern, target.block_count(), {}, method, limits, true, plan);
    if (strategy != detail::Strategy::multipartite && target.smallest_positive_factor() >= 1e-30) {
        const double plain = plain_total(pattern, target, strategy, plan);
        if (plain >= 1e-250) return std::min(0.0, std::log(plain));
    }
    return std::min(0.0, log_total(pattern, target, strategy, plan, limits));
}

double density(const Graph& pattern, const WeightedGraph& target, DensityMethod method, const EngineLimits& limits) {
    if (pattern.vertex_count() == 0) return 1.0;
    detail::EliminationPlan plan;
    const auto strategy = detail::choose_strategy(pattern, target.block_count(), {}, method, limits, true, plan);
    double value = 0;
    if (strategy != detail::Strategy::multipartite && target.smallest_positive_factor() >= 1e-30)
        value = plain_total(pattern, target, strategy, plan);
    else
        value = std::exp(log_total(pattern, target, strategy, plan, limits));
    return std::clamp(value, 0.0, 1.0);
}

Spectrum spectrum(const WeightedGraph& target) {
    const int k = target.block_count();
    Eigen::MatrixXd m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = std::sqrt(target.mass(i) * target.mass(j)) * target.weight(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("symmetric eigen-solver did not converge");
    Spectrum out;
    out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
    return out;
}

double cycle_density_spectral(int k, const WeightedGraph& target) {
    if (k < 1) throw DomainError("cycle length must be at least 1");
    double sum = 0;
    for (double lambda : spectrum(target).eigenvalues) sum += std::pow(lambda, k);
    return sum;
}

double common_neighborhood_mass(std::span<const int> blocks, const WeightedGraph& target) {
    if (blocks.empty()) throw DomainError("common neighbourhood needs a nonempty block multiset");
    for (int b : blocks)
        if (b < 0 || b >= target.block_count()) throw DomainError("block index " + std::to_string(b) + " out of range");
    double total = 0;
    for (int u = 0; u < target.block_count(); ++u) {
        double product = target.mass(u);
        for (int b : blocks) product *= target.weight(b, u);
        total += product;
    }
    return total;
}

double generalized_star_density(int n, double x, const WeightedGraph& target, const EngineLimits& limits) {
    if (n < 1) throw DomainError("star needs n >= 1");
    if (!(x >= 0)) throw DomainError("star exponent must be nonnegative");
    const int k = target.block_count();
    if (detail::power_count(k, n) > limits.enumeration_cap) throw CapExceeded("generalized star exceeds the cap");
    const auto ku = static_cast<std::size_t>(k);
    // prefix[d][u]: mass of the first d centres times prod W(v_i, u).
    std::vector<std::vector<double>> common(static_cast<std::size_t>(n) + 1, std::vector<double>(ku, 1.0));
    std::vector<double> weight(static_cast<std::size_t>(n) + 1, 1.0);
    double total = 0;
    auto walk = [&](auto&& self, int depth) -> void {
        const auto d = static_cast<std::size_t>(depth);
        if (depth == n) {
            double mass = 0;
            for (std::size_t u = 0; u < ku; ++u) mass += target.mass(static_cast<int>(u)) * common[d][u];
            total += weight[d] * std::pow(mass, x);
            return;
        }
        for (int v = 0; v < k; ++v) {
            weight[d + 1] = weight[d] * target.mass(v);
            for (std::size_t u = 0; u < ku; ++u) common[d + 1][u] = common[d][u] * target.weight(v, static_cast<int>(u));
            self(self, depth + 1);
        }
    };
    walk(walk, 0);
    return total;
}

double generalized_path_density(double alpha, int r, double beta, const WeightedGraph& target) {
    if (!(alpha >= 0 && alpha <= 1 && beta >= 0 && beta <= 1))
        throw DomainError("path end exponents must lie in [0, 1]");
    if (r < 0) throw DomainError("path length must be nonnegative");
    const int k = target.block_count();
    std::vector<double> degree(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) {
        const int single[] = {v};
        degree[static_cast<std::size_t>(v)] = common_neighborhood_mass(single, target);
    }
    std::vector<double> walk(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v)
        walk[static_cast<std::size_t>(v)] = target.mass(v) * std::pow(degree[static_cast<std::size_t>(v)], alpha);
    for (int step = 0; step < r; ++step) {
        std::vector<double> next(static_cast<std::size_t>(k), 0.0);
        for (int u = 0; u < k; ++u) {
            double sum = 0;
            for (int v = 0; v < k; ++v) sum += walk[static_cast<std::size_t>(v)] * target.weight(v, u);
            next[static_cast<std::size_t>(u)] = sum * target.mass(u);
        }
        walk = std::move(next);
    }
    double total = 0;
    for (int v = 0; v < k; ++v)
        total += walk[static_cast<std::size_t>(v)] * std::pow(degree[static_cast<std::size_t>(v)], beta);
    return total;
}

int delta_index(const Graph& graph, int i, const EngineLimits& limits) {
    if (i < 1) throw DomainError("delta index needs i >= 1");
    const int n = graph.vertex_count();
    if (n > limits.subset_vertex_cap || n > 63)
        throw CapExceeded("delta index brute force is capped at " + std::to_string(limits.subset_vertex_cap) +
                          " vertices");
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) masks[static_cast<std::size_t>(v)] = graph.neighbor_mask(v);
    int best = 0;
    auto walk = [&](auto&& self, int v, int size, std::uint64_t hood) -> void {
        if (v == n) {
            best = std::max(best, size - i * std::popcount(hood));
            return;
        }
        self(self, v + 1, size, hood);
        self(self, v + 1, size + 1, hood | masks[static_cast<std::size_t>(v)]);
    };
    walk(walk, 0, 0, 0);
    return best;
}

int independence_number(const Graph& graph) {
    const int n = graph.vertex_count();
    if (n > 64) throw CapExceeded("independence number is capped at 64 vertices");
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) masks[static_cast<std::size_t>(v)] = graph.neighbor_mask(v);
    auto solve = [&](auto&& self, std::uint64_t candidates) -> int {
        if (candidates == 0) return 0;
        int pick = -1;
        int pick_degree = -1;
        for (std::uint64_t rest = candidates; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int d = std::popcount(masks[static_cast<std::size_t>(v)] & candidates);
            if (d > pick_degree) {
                pick = v;
                pick_degree = d;
            }
        }
        const std::uint64_t bit = std::uint64_t{1} << pick;
        if (pick_degree == 0) return std::popcount(candidates);
        const int without = self(self, candidates & ~bit);
        const int with = 1 + self(self, candidates & ~bit & ~masks[static_cast<std::size_t>(pick)]);
        return std::max(without, with);
    };
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return solve(solve, all);
}

std::optional<std::vector<int>> complete_multipartite_parts(const Graph& graph) {
    const int n = graph.vertex_count();
    if (n < 2) return std::nullopt;
    std::vector<int> part(static_cast<std::size_t>(n), -1);
    std::vector<int> sizes;
    for (Vertex v = 0; v < n; ++v) {
        if (part[static_cast<std::size_t>(v)] >= 0) continue;
        const int id = static_cast<int>(sizes.size());
        sizes.push_back(0);
        for (Vertex u = v; u < n; ++u) {
            if (u != v && graph.has_edge(u, v)) continue;
            if (part[static_cast<std::size_t>(u)] >= 0) return std::nullopt;
            part[static_cast<std::size_t>(u)] = id;
            ++sizes.back();
        }
    }
    if (sizes.size() < 2) return std::nullopt;
    for (auto [u, v] : graph.edges())
        if (part[static_cast<std::size_t>(u)] == part[static_cast<std::size_t>(v)]) return std::nullopt;
    std::size_t expected = 0;
    std::size_t total = 0;
    for (int s : sizes) {
        expected += static_cast<std::size_t>(s) * total;
        total += static_cast<std::size_t>(s);
    }
    if (static_cast<std::size_t>(graph.edge_count()) != expected) return std::nullopt;
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

int elimination_width(const Graph& graph) { return detail::plan_elimination(graph, {}).width; }

}  // namespace rhokit
