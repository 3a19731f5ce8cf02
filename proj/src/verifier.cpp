#include "rhokit/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "rhokit/density.hpp"
#include "rhokit/error.hpp"
#include "rhokit/families.hpp"
#include "rhokit/rho.hpp"
#include "rhokit/sampling.hpp"

namespace rhokit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SuiteInfo {
    Suite suite;
    std::string_view name;
};

constexpr SuiteInfo kSuites[] = {
    {Suite::holder, "holder"},
    {Suite::path_interpolation, "path_interpolation"},
    {Suite::blakely_roy_gen, "blakely_roy_gen"},
    {Suite::cycle_tail, "cycle_tail"},
    {Suite::shearer_star, "shearer_star"},
    {Suite::spectral_lp, "spectral_lp"},
    {Suite::kruskal_katona, "kruskal_katona"},
    {Suite::hub, "hub"},
    {Suite::majorization_monotone, "majorization_monotone"},
    {Suite::star_tree, "star_tree"},
    {Suite::delta_star, "delta_star"},
    {Suite::cycle_path, "cycle_path"},
    {Suite::bipartite_cases, "bipartite_cases"},
    {Suite::odd_cycle_bounds, "odd_cycle_bounds"},
    {Suite::catalog_upper, "catalog_upper"},
};

// Result of one trial. `lhs` sets the tolerance scale.
struct Outcome {
    bool skipped = false;
    double residual = 0;
    double lhs = 0;
    std::string instance;
    bool broken = false;  // a side check failed outright
};

Outcome skip(std::string instance) {
    Outcome o;
    o.skipped = true;
    o.instance = std::move(instance);
    return o;
}

// log t(H) - c log t(G), skipping when t(G) = 0.
Outcome dominate(double log_h, double c, double log_g, std::string instance) {
    if (log_g == -kInf) return skip(std::move(instance));
    Outcome o;
    o.lhs = log_h;
    o.residual = log_h - c * log_g;
    o.instance = std::move(instance);
    return o;
}

std::string parts_name(const std::vector<int>& parts) {
    std::string out = "K[";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
    return out + "]";
}

Graph random_graph(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(p)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph random_connected_graph(int n, Rng& rng) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.integer(0, v - 1), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const Edge e{u, v};
            if (std::find(edges.begin(), edges.end(), e) == edges.end() && rng.coin(0.3)) edges.push_back(e);
        }
    return Graph(n, std::move(edges));
}

std::string describe(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ":";
    for (auto [u, v] : g.edges()) out << " " << u << "-" << v;
    return out.str();
}

// Base graph with gadgets attached k_i times each.
struct Gadgets {
    Graph base;
    std::vector<std::vector<Vertex>> attach;  // base vertices each gadget's root joins
    std::vector<bool> tail;                   // gadget has an extra vertex hanging off its root

    Graph build(const std::vector<int>& copies) const {
        int n = base.vertex_count();
        std::vector<Edge> edges(base.edges().begin(), base.edges().end());
        for (std::size_t i = 0; i < attach.size(); ++i) {
            for (int c = 0; c < copies[i]; ++c) {
                const int root = n++;
                for (Vertex b : attach[i]) edges.emplace_back(b, root);
                if (tail[i]) edges.emplace_back(root, n++);
            }
        }
        return Graph(n, std::move(edges));
    }
};

Outcome holder_trial(Rng& rng, const WeightedGraph& w) {
    if (rng.coin()) {
        const int a = rng.integer(2, 4);
        const int b = rng.integer(2, 4);
        const int p1[] = {a + 1, b - 1};
        const int p2[] = {a - 1, b + 1};
        const int p0[] = {a, b};
        const double l1 = log_density(complete_multipartite(p1), w);
        const double l2 = log_density(complete_multipartite(p2), w);
        const double l0 = log_density(complete_multipartite(p0), w);
        return dominate(l1 + l2, 2, l0, "centre step K[" + std::to_string(a) + "," + std::to_string(b) + "]");
    }
    Gadgets gadgets;
    const int nb = rng.integer(1, 3);
    gadgets.base = random_graph(nb, 0.5, rng);
    for (int i = 0; i < 2; ++i) {
        std::vector<Vertex> attach;
        for (Vertex v = 0; v < nb; ++v)
            if (rng.coin()) attach.push_back(v);
        if (attach.empty()) attach.push_back(rng.integer(0, nb - 1));
        gadgets.attach.push_back(attach);
        gadgets.tail.push_back(rng.coin(0.3));
    }
    const int a = rng.integer(1, 2);
    const int b = rng.integer(1, 2);
    std::vector<int> x(2), y(2), z(2);
    for (std::size_t i = 0; i < 2; ++i) {
        z[i] = rng.integer(0, 3);
        int d = rng.integer(-1, 1);
        if (z[i] + b * d < 0 || z[i] - a * d < 0) d = 0;
        x[i] = z[i] + b * d;
        y[i] = z[i] - a * d;
    }
    const double lx = log_density(gadgets.build(x), w);
    const double ly = log_density(gadgets.build(y), w);
    const double lz = log_density(gadgets.build(z), w);
    std::ostringstream name;
    name << "base " << describe(gadgets.base) << ", a=" << a << " b=" << b << " x=(" << x[0] << "," << x[1]
         << ") y=(" << y[0] << "," << y[1] << ") z=(" << z[0] << "," << z[1] << ")";
    if (lz == -kInf) return skip(name.str());
    Outcome o;
    o.lhs = a * lx + b * ly;
    o.residual = (a * lx + b * ly) - (a + b) * lz;
    o.instance = name.str();
    return o;
}

Outcome path_interpolation_trial(Rng& rng, const WeightedGraph& w) {
    int x = 0, y = 0, a = 0, b = 0;
    do {
        x = 2 * rng.integer(1, 4);
        y = 2 * rng.integer(1, 4);
        a = rng.integer(1, 3);
        b = rng.integer(1, 3);
    } while ((a * x + b * y) % (a + b) != 0);
    const int z = (a * x + b * y) / (a + b);
    const double lx = log_density(path_graph(x), w);
    const double ly = log_density(path_graph(y), w);
    const double lz = log_density(path_graph(z), w);
    std::ostringstream name;
    name << "P" << x << "^" << a << " P" << y << "^" << b << " vs P" << z;
    if (lz == -kInf) return skip(name.str());
    Outcome o;
    o.lhs = a * lx + b * ly;
    o.residual = o.lhs - (a + b) * lz;
    o.instance = name.str();
    return o;
}

Outcome blakely_roy_trial(Rng& rng, const WeightedGraph& w) {
    static constexpr double kBetas[] = {0, 0.25, 0.5, 0.75, 1};
    const double beta = kBetas[rng.integer(0, 4)];
    const int r = rng.integer(1, 6);
    const double l1 = log_density(path_graph(1), w);
    const double lg = std::log(generalized_path_density(0, r, beta, w));
    std::ostringstream name;
    name << "P(0," << r << "," << beta << ")";
    Outcome o = dominate(lg, r + beta, l1, name.str());
    if (!o.skipped && beta == 0) {
        const double plain = domination_residual(path_graph(1), path_graph(r), r, w);
        if (std::abs(plain - o.residual) > 1e-12 * (1 + std::abs(plain))) {
            o.broken = true;
            o.instance += " (beta = 0 disagrees with the plain path residual)";
        }
    }
    return o;
}

Outcome cycle_tail_trial(Rng& rng, const WeightedGraph& w) {
    const int k = rng.integer(1, 3);
    const int l = rng.integer(0, 6);
    const double exponent = 1 + ((l + k - 1) / k) / 2.0;
    const double lc = log_density(cycle_graph(2 * k + 1), w);
    const double lg = log_density(cycle_tail_graph(k, l), w);
    return dominate(lg, exponent, lc, "Gtail[" + std::to_string(k) + "," + std::to_string(l) + "]");
}

Outcome shearer_trial(Rng& rng, const WeightedGraph& w) {
    const int a = rng.integer(1, 2);
    const int b = rng.integer(1, 3);
    const int c = rng.integer(a + 1, a + 2);
    const double x = static_cast<double>(b) * c / a;
    const double small = std::log(generalized_star_density(a, b, w));
    const double big = std::log(generalized_star_density(c, x, w));
    std::ostringstream name;
    name << "K(" << c << "," << x << ") vs K(" << a << "," << b << ")";
    if (small == -kInf) return skip(name.str());
    Outcome o;
    o.lhs = static_cast<double>(c) / a * small;
    o.residual = o.lhs - big;
    o.instance = name.str();
    return o;
}

Outcome spectral_trial(Rng& rng, const WeightedGraph& w) {
    const int n = rng.integer(2, 3);
    const int m = rng.integer(2 * n + 1, 2 * n + 4);
    const double even = log_density(cycle_graph(2 * n), w);
    const double other = log_density(cycle_graph(m), w);
    return dominate(even, 2.0 * n / m, other, "C" + std::to_string(2 * n) + " vs C" + std::to_string(m));
}

Outcome kruskal_katona_trial(Rng& rng, const WeightedGraph& w) {
    const int s = rng.integer(2, 5);
    const int t = rng.integer(2, s);
    const double ls = log_density(complete_graph(s), w);
    const double lt = log_density(complete_graph(t), w);
    return dominate(lt, static_cast<double>(t) / s, ls, "K" + std::to_string(s) + " vs K" + std::to_string(t));
}

Outcome hub_trial(Rng& rng, const WeightedGraph& w) {
    const int n = rng.integer(2, 3);
    std::vector<int> a(static_cast<std::size_t>(n));
    int total = 0;
    for (int& x : a) total += x = rng.integer(0, 2);
    std::string name = "Khub[";
    for (std::size_t i = 0; i < a.size(); ++i) name += (i ? "," : "") + std::to_string(a[i]);
    name += "]";
    const double lk = log_density(complete_graph(n), w);
    const double lh = log_density(hub_graph(a), w);
    return dominate(lh, 1 + total, lk, name);
}

std::vector<int> random_parts(int total, int count, Rng& rng) {
    std::vector<int> parts(static_cast<std::size_t>(count), 1);
    for (int extra = total - count; extra > 0; --extra) ++parts[static_cast<std::size_t>(rng.integer(0, count - 1))];
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

Outcome majorization_trial(Rng& rng, const WeightedGraph& w) {
    const int count = rng.integer(2, 3);
    const int total = rng.integer(count + 1, 8);
    std::vector<int> a = random_parts(total, count, rng);
    std::vector<int> b = random_parts(total, count, rng);
    if (!majorizes(a, b)) {
        if (!majorizes(b, a)) return skip(parts_name(a) + " and " + parts_name(b) + " are incomparable");
        std::swap(a, b);
    }
    const double la = log_density(complete_multipartite(a), w);
    const double lb = log_density(complete_multipartite(b), w);
    return dominate(la, 1, lb, parts_name(a) + " over " + parts_name(b));
}

Outcome star_tree_trial(Rng& rng, const WeightedGraph& w) {
    const int v = rng.integer(2, 5);
    const int t = rng.integer(v - 1, v + 1);
    const Graph g = random_connected_graph(v, rng);
    const double lg = log_density(g, w);
    const double ls = log_density(star_graph(t), w);
    return dominate(ls, static_cast<double>(t) / (v - 1), lg, "S" + std::to_string(t) + " vs " + describe(g));
}

Outcome delta_star_trial(Rng& rng, const WeightedGraph& w) {
    const int v = rng.integer(2, 6);
    Graph g = random_graph(v, 0.45, rng);
    if (g.empty()) g = Graph(v, {{0, 1}});
    const int delta = delta_index(g, 1);
    const double lg = log_density(g, w);
    const double le = log_density(path_graph(1), w);
    return dominate(le, 2.0 / (v - delta), lg, "K2 vs " + describe(g));
}

Outcome cycle_path_trial(Rng& rng, const WeightedGraph& w) {
    if (rng.coin()) {
        const int m = rng.integer(3, 6);
        const int n = rng.integer(1, 7);
        const double exponent = n <= m - 1 ? static_cast<double>(n + 1) / m : static_cast<double>(n) / (m - 1);
        return dominate(log_density(path_graph(n), w), exponent, log_density(cycle_graph(m), w),
                        "C" + std::to_string(m) + " vs P" + std::to_string(n));
    }
    const int m = rng.integer(1, 6);
    const int n = rng.integer(2, 4);
    return dominate(log_density(cycle_graph(2 * n), w), 2.0 * n / m, log_density(path_graph(m), w),
                    "P" + std::to_string(m) + " vs C" + std::to_string(2 * n));
}

Outcome bipartite_trial(Rng& rng, const WeightedGraph& w) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<int> a{rng.integer(1, 4), rng.integer(1, 4)};
        std::vector<int> b{rng.integer(1, 4), rng.integer(1, 4)};
        std::sort(a.begin(), a.end(), std::greater<>());
        std::sort(b.begin(), b.end(), std::greater<>());
        const Graph ga = complete_multipartite(a);
        const Graph gb = complete_multipartite(b);
        const RhoResult r = rho_exact(ga, gb);
        if (r.status != RhoStatus::exact) continue;
        return dominate(log_density(gb, w), r.value->to_double(), log_density(ga, w),
                        parts_name(a) + " vs " + parts_name(b) + " at " + r.value->to_string());
    }
    return skip("no closed bipartite case sampled");
}

Outcome odd_cycle_trial(Rng& rng, const WeightedGraph& w) {
    if (rng.coin()) {
        const int n = rng.integer(2, 4);
        const int k = rng.integer(3, 2 * n);
        const double exponent = 2.0 * n * (2 * n - 2) / (2.0 * n * k - 2 * n - k);
        return dominate(log_density(cycle_graph(2 * n), w), exponent, log_density(cycle_graph(k), w),
                        "C" + std::to_string(k) + " vs C" + std::to_string(2 * n));
    }
    const int k = rng.integer(1, 2);
    const int n = rng.integer(k + 1, 4);
    const double exponent = (n + k - 1) / k + 1;
    return dominate(log_density(cycle_graph(2 * n + 1), w), exponent, log_density(cycle_graph(2 * k + 1), w),
                    "C" + std::to_string(2 * k + 1) + " vs C" + std::to_string(2 * n + 1));
}

struct CatalogEntry {
    std::string g;
    std::string h;
    Graph graph_g;
    Graph graph_h;
    double value;
};

constexpr std::pair<std::string_view, std::string_view> kCatalogPairs[] = {
    {"P1", "P2"}, {"P2", "P3"}, {"P3", "P2"}, {"P1", "P3"}, {"P2", "P4"}, {"P3", "P5"},
    {"P4", "P2"}, {"P5", "P1"}, {"C5", "C4"}, {"C6", "C4"}, {"C4", "P2"}, {"C3", "P4"},
    {"C3", "P2"}, {"C5", "P2"}, {"P2", "C4"}, {"P3", "C6"}, {"K3", "K2"}, {"K4", "K3"},
    {"K4", "K2"}, {"K[2,1]", "K[3,2]"}, {"K[2,2]", "K[3,3]"}, {"K[3,2]", "K[2,2]"},
    {"K[3,3]", "K[2,1]"}, {"K3", "Khub[1,1,1]"}, {"K3", "Khub[1,0,0]"}, {"K2", "Khub[1,1]"},
    {"K[2,2,1]", "K[3,1,1]"}, {"paw", "C4"}, {"C4", "K2"}, {"P3", "S3"}, {"C5", "S4"},
    {"paw", "K2"}, {"S3", "K2"},
};

std::vector<CatalogEntry> catalog_entries(const SuiteOptions& options) {
    std::vector<std::pair<std::string, std::string>> pairs;
    if (options.catalog_pair) {
        pairs.push_back(*options.catalog_pair);
    } else {
        for (auto [g, h] : kCatalogPairs) pairs.emplace_back(g, h);
    }
    std::vector<CatalogEntry> out;
    for (auto& [g, h] : pairs) {
        const RhoResult r = rho_exact(g, h);
        if (r.status != RhoStatus::exact) continue;
        out.push_back({g, h, parse_graph_spec(g), parse_graph_spec(h), r.value->to_double()});
    }
    return out;
}

Outcome catalog_trial(Rng& rng, const WeightedGraph& w, const std::vector<CatalogEntry>& entries) {
    if (entries.empty()) return skip("no exact catalog entry");
    const auto& e = entries[static_cast<std::size_t>(rng.integer(0, static_cast<int>(entries.size()) - 1))];
    return dominate(log_density(e.graph_h, w), e.value, log_density(e.graph_g, w), e.g + " vs " + e.h);
}

}  // namespace

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites = [] {
        std::vector<Suite> out;
        for (const auto& s : kSuites) out.push_back(s.suite);
        return out;
    }();
    return suites;
}

std::string_view to_string(Suite suite) {
    for (const auto& s : kSuites)
        if (s.suite == suite) return s.name;
    return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
    for (const auto& s : kSuites)
        if (s.name == name) return s.suite;
    return std::nullopt;
}

double domination_residual(const Graph& g, const Graph& h, double c, const WeightedGraph& w) {
    const double lg = log_density(g, w);
    if (lg == -kInf) throw DomainError("domination residual needs t(G, W) > 0");
    const double lh = log_density(h, w);
    if (lh == -kInf) return -kInf;
    return lh - c * lg;
}

SuiteReport run_suite(Suite suite, int trials, std::uint64_t seed, const SuiteOptions& options) {
    if (trials < 0) throw DomainError("trial count must be nonnegative");
    std::vector<CatalogEntry> catalog;
    if (suite == Suite::catalog_upper) catalog = catalog_entries(options);

    std::vector<Outcome> outcomes(static_cast<std::size_t>(trials));
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(trials));
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (int trial = next++; trial < trials; trial = next++) {
            try {
                const auto t = static_cast<std::size_t>(trial);
                seeds[t] = derive_seed(seed, static_cast<std::uint64_t>(trial));
                Rng rng(seeds[t]);
                const Profile profile = kAllProfiles[trial % 5];
                const int size = 2 + (trial / 5) % 4;
                const WeightedGraph w = sample_weighted_graph(profile, size, rng.next());
                Outcome o;
                switch (suite) {
                case Suite::holder: o = holder_trial(rng, w); break;
                case Suite::path_interpolation: o = path_interpolation_trial(rng, w); break;
                case Suite::blakely_roy_gen: o = blakely_roy_trial(rng, w); break;
                case Suite::cycle_tail: o = cycle_tail_trial(rng, w); break;
                case Suite::shearer_star: o = shearer_trial(rng, w); break;
                case Suite::spectral_lp: o = spectral_trial(rng, w); break;
                case Suite::kruskal_katona: o = kruskal_katona_trial(rng, w); break;
                case Suite::hub: o = hub_trial(rng, w); break;
                case Suite::majorization_monotone: o = majorization_trial(rng, w); break;
                case Suite::star_tree: o = star_tree_trial(rng, w); break;
                case Suite::delta_star: o = delta_star_trial(rng, w); break;
                case Suite::cycle_path: o = cycle_path_trial(rng, w); break;
                case Suite::bipartite_cases: o = bipartite_trial(rng, w); break;
                case Suite::odd_cycle_bounds: o = odd_cycle_trial(rng, w); break;
                case Suite::catalog_upper: o = catalog_trial(rng, w, catalog); break;
                }
                o.instance += " on " + std::string(to_string(profile)) + "/" + std::to_string(size);
                outcomes[t] = std::move(o);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = trials;
            }
        }
    };
    const int jobs = std::clamp(options.jobs, 1, std::max(1, trials));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    SuiteReport report;
    report.suite = std::string(to_string(suite));
    report.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        const Outcome& o = outcomes[static_cast<std::size_t>(trial)];
        if (o.skipped || std::isnan(o.residual)) {
            ++report.skipped;
            continue;
        }
        if (!report.min_residual || o.residual < *report.min_residual) report.min_residual = o.residual;
        const double tolerance = 1e-9 * (1 + std::abs(o.lhs));
        if (o.broken || o.residual < -tolerance)
            report.failures.push_back({trial, seeds[static_cast<std::size_t>(trial)], o.instance, o.residual});
    }
    return report;
}

}  // namespace rhokit
