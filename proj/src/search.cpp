#include "rhokit/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "rhokit/constructions.hpp"
#include "rhokit/density.hpp"
#include "rhokit/error.hpp"
#include "rhokit/gradient.hpp"
#include "rhokit/rho.hpp"
#include "rhokit/sampling.hpp"

namespace rhokit {

namespace {

constexpr double kMassFloor = 1e-15;

struct Start {
    std::string name;
    ConstructionFamily family;
    double scale;
};

// Seeds for the construction restarts, tried in this order.
const std::vector<Start>& construction_starts() {
    static const std::vector<Start> starts = {
        {"two_clique", {ConstructionKind::two_clique, {}}, 2},
        {"paw_family", {ConstructionKind::paw_family, {}}, 1e3},
        {"looped_star", {ConstructionKind::looped_star, {}}, 1e2},
        {"half_block", {ConstructionKind::half_block, {}}, 2},
        {"constant_p", {ConstructionKind::constant_p, {0.5}}, 2},
        {"looped_vertex", {ConstructionKind::looped_vertex, {}}, 10},
    };
    return starts;
}

struct Point {
    std::vector<double> masses;
    std::vector<double> weights;  // k * k, symmetric
};

Point to_point(const WeightedGraph& w) {
    return {{w.masses().begin(), w.masses().end()}, {w.weights().begin(), w.weights().end()}};
}

WeightedGraph point_graph(const Point& p) { return WeightedGraph::normalized(p.masses, p.weights); }

struct Evaluation {
    bool feasible = false;
    double ratio = 0;
};

Evaluation evaluate(const Graph& g, const Graph& h, const WeightedGraph& w, double epsilon,
                    const EngineLimits& limits) {
    const double lg = log_density(g, w, DensityMethod::automatic, limits);
    if (!std::isfinite(lg) || lg > std::log1p(-epsilon)) return {};
    const double lh = log_density(h, w, DensityMethod::automatic, limits);
    if (!std::isfinite(lh)) return {};
    return {true, lh / lg};
}

// Gradient of log t(H) / log t(G) over the free coordinates: masses projected
// onto the simplex tangent, weights taken per unordered pair.
Point ratio_gradient(const Graph& g, const Graph& h, const WeightedGraph& w, const EngineLimits& limits) {
    const DensityGradient dg = density_gradient(g, w, limits);
    const DensityGradient dh = density_gradient(h, w, limits);
    const double lg = std::log(dg.value);
    const double lh = std::log(dh.value);
    const int k = w.block_count();
    Point out;
    out.masses.resize(static_cast<std::size_t>(k));
    out.weights.resize(static_cast<std::size_t>(k * k));
    auto quotient = [&](double dtg, double dth) {
        return (dth / dh.value * lg - lh * dtg / dg.value) / (lg * lg);
    };
    double mean = 0;
    for (std::size_t i = 0; i < out.masses.size(); ++i) {
        out.masses[i] = quotient(dg.masses[i], dh.masses[i]);
        mean += out.masses[i];
    }
    mean /= k;
    for (double& m : out.masses) m -= mean;
    for (std::size_t i = 0; i < out.weights.size(); ++i) out.weights[i] = quotient(dg.weights[i], dh.weights[i]);
    return out;
}

Point step_along(const Point& x, const Point& d, double s) {
    Point y = x;
    double total = 0;
    for (std::size_t i = 0; i < y.masses.size(); ++i) {
        y.masses[i] = std::max(kMassFloor, x.masses[i] + s * d.masses[i]);
        total += y.masses[i];
    }
    for (double& m : y.masses) m /= total;
    for (std::size_t i = 0; i < y.weights.size(); ++i) y.weights[i] = std::clamp(x.weights[i] + s * d.weights[i], 0.0, 1.0);
    return y;
}

struct RestartOutcome {
    RestartTrace trace;
    std::optional<WeightedGraph> best;
};

RestartOutcome ascend(const Graph& g, const Graph& h, WeightedGraph start, std::string name, int blocks,
                      const SearchConfig& config, const EngineLimits& limits) {
    RestartOutcome out;
    out.trace.blocks = blocks;
    out.trace.start = std::move(name);
    Evaluation current = evaluate(g, h, start, config.epsilon, limits);
    if (!current.feasible) return out;
    Point x = to_point(start);
    WeightedGraph w = std::move(start);
    int accepted = 0;
    for (; accepted < config.iterations; ++accepted) {
        Point d = ratio_gradient(g, h, w, limits);
        // drop components pushing against a bound they already sit on
        for (std::size_t i = 0; i < d.weights.size(); ++i)
            if ((x.weights[i] >= 1 && d.weights[i] > 0) || (x.weights[i] <= 0 && d.weights[i] < 0)) d.weights[i] = 0;
        double scale = 0;
        for (double v : d.masses) scale = std::max(scale, std::abs(v));
        for (double v : d.weights) scale = std::max(scale, std::abs(v));
        if (!(scale > 0) || !std::isfinite(scale)) break;
        for (double& v : d.masses) v /= scale;
        for (double& v : d.weights) v /= scale;

        bool moved = false;
        double s = config.step;
        for (int halving = 0; halving <= config.halvings && !moved; ++halving, s /= 2) {
            Point y = step_along(x, d, s);
            WeightedGraph candidate = point_graph(y);
            const Evaluation e = evaluate(g, h, candidate, config.epsilon, limits);
            if (e.feasible && e.ratio > current.ratio) {
                x = to_point(candidate);
                w = std::move(candidate);
                current = e;
                moved = true;
            }
        }
        if (!moved) break;
    }
    out.trace.iterations = accepted;
    out.trace.ratio = current.ratio;
    out.best = std::move(w);
    return out;
}

SearchResult run_search(const Graph& g, const Graph& h, const SearchConfig& config, const EngineLimits& limits,
                        const RhoResult& catalog) {
    config.validate();
    if (g.empty()) throw DomainError("search needs G with at least one edge");
    if (!finiteness(g, h, limits)) throw DomainError("H has no homomorphism into G; the exponent is infinite");

    struct Task {
        int blocks;
        int restart;
    };
    std::vector<Task> tasks;
    for (int b : config.blocks)
        for (int r = 0; r < config.restarts; ++r) tasks.push_back({b, r});

    std::vector<RestartOutcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                const Task& task = tasks[i];
                Rng rng(derive_seed(config.seed, i));
                WeightedGraph start = sample_weighted_graph(Profile::uniform, task.blocks, rng.next());
                std::string name;
                bool seeded = false;
                if (task.restart % 2 == 0) {
                    const auto& starts = construction_starts();
                    const Start& s = starts[static_cast<std::size_t>(task.restart / 2) % starts.size()];
                    const WeightedGraph base = build_construction(s.family, s.scale);
                    if (base.block_count() <= task.blocks) {
                        start = split_to_size(base, task.blocks);
                        if (task.restart > 0) start = jitter(start, 0.05, rng);
                        name = s.name;
                        seeded = true;
                    }
                }
                if (!seeded) {
                    const Profile profile = kAllProfiles[static_cast<std::size_t>(task.restart / 2) % 5];
                    start = sample_weighted_graph(profile, task.blocks, rng.next());
                    name = "random:" + std::string(to_string(profile));
                }
                outcomes[i] = ascend(g, h, std::move(start), std::move(name), task.blocks, config, limits);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = tasks.size();
            }
        }
    };
    const int jobs = std::clamp(config.jobs, 1, std::max(1, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    SearchResult result;
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        result.traces.push_back(outcomes[i].trace);
        if (!outcomes[i].trace.ratio) continue;
        if (!best || *outcomes[i].trace.ratio > *outcomes[*best].trace.ratio) best = i;
    }
    if (!best) {
        std::ostringstream msg;
        msg << "all " << outcomes.size() << " restarts were degenerate:";
        for (const auto& t : result.traces) msg << " " << t.blocks << "/" << t.start;
        throw DomainError(msg.str());
    }
    result.best_ratio = *outcomes[*best].trace.ratio;
    result.best = *outcomes[*best].best;
    result.catalog_lower = catalog.lower;
    result.catalog_upper = catalog.upper;
    if (catalog.upper && result.best_ratio > catalog.upper->to_double() + 1e-6) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "search reached " << result.best_ratio << " above the proven upper bound "
            << catalog.upper->to_string();
        throw DiscrepancyError(msg.str());
    }
    return result;
}

}  // namespace

void SearchConfig::validate() const {
    if (blocks.empty()) throw DomainError("search needs at least one block count");
    for (int b : blocks)
        if (b < 1 || b > 8) throw DomainError("block counts must lie in 1..8");
    if (restarts < 1 || iterations < 0 || halvings < 0 || jobs < 1) throw DomainError("search counts must be positive");
    if (!(step > 0)) throw DomainError("step must be positive");
    if (!(epsilon > 0 && epsilon < 0.5)) throw DomainError("epsilon must lie in (0, 0.5)");
}

double ratio_objective(const Graph& g, const Graph& h, const WeightedGraph& w, const EngineLimits& limits) {
    const double lg = log_density(g, w, DensityMethod::automatic, limits);
    if (!std::isfinite(lg) || lg >= 0) throw DomainError("ratio needs 0 < t(G, W) < 1");
    return log_density(h, w, DensityMethod::automatic, limits) / lg;
}

SearchResult search_lower_bound(const Graph& g, const Graph& h, const SearchConfig& config,
                                const EngineLimits& limits) {
    return run_search(g, h, config, limits, rho_exact(g, h, limits));
}

SearchResult search_lower_bound(const GraphSpec& g, const GraphSpec& h, const SearchConfig& config,
                                const EngineLimits& limits) {
    return run_search(to_graph(g), to_graph(h), config, limits, rho_exact(g, h, limits));
}

}  // namespace rhokit
