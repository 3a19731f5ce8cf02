#pragma once

// Sum-product over block assignments of a pattern graph, generic over the
// scalar type. Shared by the density engine and the gradient code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <vector>

#include "rhokit/density.hpp"
#include "rhokit/error.hpp"
#include "rhokit/graph.hpp"
#include "rhokit/limits.hpp"

namespace rhokit::detail {

// Nonnegative reals stored as their logarithm: + is logaddexp, * is +.
struct LogReal {
    double log = -std::numeric_limits<double>::infinity();

    static LogReal zero() { return {}; }
    static LogReal one() { return {0.0}; }
    static LogReal from(double x) { return {x > 0 ? std::log(x) : -std::numeric_limits<double>::infinity()}; }
    bool is_zero() const { return log == -std::numeric_limits<double>::infinity(); }

    friend LogReal operator*(LogReal a, LogReal b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return {a.log + b.log};
    }
    friend LogReal operator+(LogReal a, LogReal b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const double hi = std::max(a.log, b.log);
        const double lo = std::min(a.log, b.log);
        return {hi + std::log1p(std::exp(lo - hi))};
    }
    LogReal& operator+=(LogReal b) { return *this = *this + b; }
};

// Exact counts; overflow is an error rather than wraparound.
struct CheckedCount {
    std::uint64_t value = 0;

    static CheckedCount zero() { return {0}; }
    static CheckedCount one() { return {1}; }
    bool is_zero() const { return value == 0; }

    friend CheckedCount operator+(CheckedCount a, CheckedCount b) {
        CheckedCount out;
        if (__builtin_add_overflow(a.value, b.value, &out.value)) throw NumericError("homomorphism count overflows 64 bits");
        return out;
    }
    friend CheckedCount operator*(CheckedCount a, CheckedCount b) {
        CheckedCount out;
        if (__builtin_mul_overflow(a.value, b.value, &out.value)) throw NumericError("homomorphism count overflows 64 bits");
        return out;
    }
    CheckedCount& operator+=(CheckedCount b) { return *this = *this + b; }
};

template <class S>
struct Scalar {
    static S zero() { return S::zero(); }
    static S one() { return S::one(); }
    static bool is_zero(const S& s) { return s.is_zero(); }
};

template <>
struct Scalar<double> {
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool is_zero(double s) { return s == 0.0; }
};

// The polynomial: every vertex carries the same unary table (block masses),
// every edge the same symmetric binary table. Vertices flagged in `bare`
// carry no unary factor (used to differentiate by a mass).
template <class S>
struct SumProduct {
    int blocks = 0;
    std::vector<S> unary;   // blocks entries
    std::vector<S> binary;  // blocks * blocks entries, symmetric
    std::vector<char> bare; // empty, or one flag per pattern vertex
};

// Table over the assignments of `scope`; the digit of scope[j] has stride blocks^j.
template <class S>
struct Factor {
    std::vector<Vertex> scope;
    std::vector<S> table;
};

struct EliminationPlan {
    std::vector<Vertex> order;  // every vertex not kept
    int width = 0;              // largest neighbourhood at elimination time
};

// Greedy min-degree order on the interaction graph; ties go to the lowest index.
inline EliminationPlan plan_elimination(const Graph& g, std::span<const Vertex> keep) {
    const int n = g.vertex_count();
    std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    for (Vertex v : keep) done[static_cast<std::size_t>(v)] = 1;
    EliminationPlan plan;
    const int to_remove = n - static_cast<int>(keep.size());
    for (int step = 0; step < to_remove; ++step) {
        Vertex best = -1;
        std::size_t best_degree = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (done[static_cast<std::size_t>(v)]) continue;
            const std::size_t d = adj[static_cast<std::size_t>(v)].size();
            if (best < 0 || d < best_degree) {
                best = v;
                best_degree = d;
            }
        }
        auto& nb = adj[static_cast<std::size_t>(best)];
        plan.width = std::max(plan.width, static_cast<int>(nb.size()));
        for (Vertex a : nb) {
            auto& na = adj[static_cast<std::size_t>(a)];
            na.erase(best);
            for (Vertex b : nb)
                if (b != a) na.insert(b);
        }
        nb.clear();
        done[static_cast<std::size_t>(best)] = 1;
        plan.order.push_back(best);
    }
    return plan;
}

inline double power_count(int base, int exponent) { return std::pow(static_cast<double>(base), exponent); }

// Multiplies all `factors` over the variables `vars` (vars[0] first digit).
// If sum_first is set, the first variable is summed out of the result.
template <class S>
Factor<S> combine(const std::vector<const Factor<S>*>& factors, const std::vector<Vertex>& vars, int blocks,
                  bool sum_first) {
    using T = Scalar<S>;
    const std::size_t u = vars.size();
    struct Access {
        const Factor<S>* factor;
        std::vector<std::pair<std::size_t, std::size_t>> digits;  // (position in vars, stride)
    };
    std::vector<Access> access;
    access.reserve(factors.size());
    for (const Factor<S>* f : factors) {
        Access a{f, {}};
        std::size_t stride = 1;
        for (Vertex v : f->scope) {
            const auto pos = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin());
            a.digits.emplace_back(pos, stride);
            stride *= static_cast<std::size_t>(blocks);
        }
        access.push_back(std::move(a));
    }

    Factor<S> out;
    out.scope.assign(vars.begin() + (sum_first ? 1 : 0), vars.end());
    std::size_t out_size = 1;
    for (std::size_t i = 0; i < out.scope.size(); ++i) out_size *= static_cast<std::size_t>(blocks);
    out.table.assign(out_size, T::zero());

    std::vector<int> digit(u, 0);
    const std::size_t total = out_size * (sum_first ? static_cast<std::size_t>(blocks) : 1);
    for (std::size_t index = 0; index < total; ++index) {
        S term = T::one();
        for (const Access& a : access) {
            std::size_t at = 0;
            for (auto [pos, stride] : a.digits) at += static_cast<std::size_t>(digit[pos]) * stride;
            term = term * a.factor->table[at];
            if (T::is_zero(term)) break;
        }
        const std::size_t target = sum_first ? index / static_cast<std::size_t>(blocks) : index;
        if (!T::is_zero(term)) out.table[target] = out.table[target] + term;
        for (std::size_t j = 0; j < u; ++j) {
            if (++digit[j] < blocks) break;
            digit[j] = 0;
        }
    }
    return out;
}

// Eliminates every vertex outside `keep` along `plan`, returning the marginal
// table over `keep` (in the given order).
template <class S>
Factor<S> eliminate(const Graph& g, const SumProduct<S>& p, std::span<const Vertex> keep, const EliminationPlan& plan) {
    using T = Scalar<S>;
    std::vector<Factor<S>> factors;
    factors.reserve(static_cast<std::size_t>(g.vertex_count() + g.edge_count()) + plan.order.size());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!p.bare.empty() && p.bare[static_cast<std::size_t>(v)]) continue;
        factors.push_back({{v}, p.unary});
    }
    for (auto [u, v] : g.edges()) factors.push_back({{u, v}, p.binary});
    std::vector<char> alive(factors.size(), 1);

    for (Vertex v : plan.order) {
        std::vector<const Factor<S>*> touching;
        std::vector<std::size_t> touched;
        std::set<Vertex> others;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (!alive[i]) continue;
            const auto& scope = factors[i].scope;
            if (std::find(scope.begin(), scope.end(), v) == scope.end()) continue;
            touching.push_back(&factors[i]);
            touched.push_back(i);
            for (Vertex w : scope)
                if (w != v) others.insert(w);
        }
        std::vector<Vertex> vars{v};
        vars.insert(vars.end(), others.begin(), others.end());
        Factor<S> reduced;
        if (touching.empty()) {
            // bare isolated vertex: each block contributes one
            reduced.table.assign(1, T::zero());
            for (int b = 0; b < p.blocks; ++b) reduced.table[0] = reduced.table[0] + T::one();
        } else {
            reduced = combine(touching, vars, p.blocks, true);
        }
        for (std::size_t i : touched) alive[i] = 0;
        factors.push_back(std::move(reduced));
        alive.push_back(1);
    }

    std::vector<const Factor<S>*> rest;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (alive[i]) rest.push_back(&factors[i]);
    std::vector<Vertex> vars(keep.begin(), keep.end());
    return combine(rest, vars, p.blocks, false);
}

// Backtracking over all assignments, pruning zero partial products.
template <class S>
Factor<S> enumerate(const Graph& g, const SumProduct<S>& p, std::span<const Vertex> keep) {
    using T = Scalar<S>;
    const int n = g.vertex_count();
    const int k = p.blocks;
    Factor<S> out;
    out.scope.assign(keep.begin(), keep.end());
    std::size_t size = 1;
    for (std::size_t i = 0; i < keep.size(); ++i) size *= static_cast<std::size_t>(k);
    out.table.assign(size, T::zero());

    // Earlier neighbours of each vertex in index order.
    std::vector<std::vector<Vertex>> back(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) back[static_cast<std::size_t>(std::max(u, v))].push_back(std::min(u, v));

    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    std::vector<S> partial(static_cast<std::size_t>(n) + 1, T::one());
    auto leaf = [&]() {
        std::size_t at = 0;
        std::size_t stride = 1;
        for (Vertex v : keep) {
            at += static_cast<std::size_t>(assign[static_cast<std::size_t>(v)]) * stride;
            stride *= static_cast<std::size_t>(k);
        }
        out.table[at] = out.table[at] + partial[static_cast<std::size_t>(n)];
    };
    if (n == 0) {
        leaf();
        return out;
    }
    // Iterative depth-first walk.
    int depth = 0;
    assign[0] = -1;
    while (depth >= 0) {
        const auto d = static_cast<std::size_t>(depth);
        if (++assign[d] >= k) {
            --depth;
            continue;
        }
        const int b = assign[d];
        S term = partial[d];
        if (p.bare.empty() || !p.bare[d]) term = term * p.unary[static_cast<std::size_t>(b)];
        for (Vertex w : back[d]) {
            if (T::is_zero(term)) break;
            term = term * p.binary[static_cast<std::size_t>(b * k + assign[static_cast<std::size_t>(w)])];
        }
        if (T::is_zero(term)) continue;
        partial[d + 1] = term;
        if (depth + 1 == n) {
            leaf();
        } else {
            ++depth;
            assign[static_cast<std::size_t>(depth)] = -1;
        }
    }
    return out;
}

enum class Strategy { eliminate, enumerate, multipartite };

// Resolves `method` for a pattern with `blocks` target blocks. Multipartite
// is only offered when `allow_multipartite` is set and no marginal is asked for.
Strategy choose_strategy(const Graph& g, int blocks, std::span<const Vertex> keep, DensityMethod method,
                         const EngineLimits& limits, bool allow_multipartite, EliminationPlan& plan);

template <class S>
Factor<S> run(const Graph& g, const SumProduct<S>& p, std::span<const Vertex> keep, Strategy strategy,
              const EliminationPlan& plan) {
    if (strategy == Strategy::eliminate) return eliminate(g, p, keep, plan);
    return enumerate(g, p, keep);
}

}  // namespace rhokit::detail
