// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "rhokit/constructions.hpp"
#include "rhokit/density.hpp"
#include "rhokit/error.hpp"
#include "rhokit/families.hpp"
#include "rhokit/gradient.hpp"
#include "rhokit/graph_spec.hpp"
#include "rhokit/rho.hpp"
#include "rhokit/sampling.hpp"
#include "rhokit/search.hpp"
#include "rhokit/verifier.hpp"

using namespace rhokit;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

double relative_gap(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0 ? 0 : std::abs(a - b) / scale;
}

std::string fmt(const char* format, double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, format, x);
    return buffer;
}

// Random W of 2..5 blocks, profiles in rotation.
WeightedGraph random_target(int index, std::uint64_t salt) {
    return sample_weighted_graph(kAllProfiles[index % 5], 2 + (index / 5) % 4, derive_seed(salt, static_cast<std::uint64_t>(index)));
}

Verdict oracle_equivalence() {
    Verdict v;
    std::vector<Graph> patterns{Graph(0)};
    for (int n = 1; n <= 5; ++n)
        for (Graph& g : oracle::all_graphs(n)) patterns.push_back(std::move(g));
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        const WeightedGraph w = random_target(i, 101);
        for (const Graph& g : patterns) worst = std::max(worst, relative_gap(density(g, w, DensityMethod::enumerate), oracle::density(g, w)));
    }
    bool factorials = true;
    std::uint64_t factorial = 1;
    for (int n = 1; n <= 6; ++n) {
        factorial *= static_cast<std::uint64_t>(n);
        factorials = factorials && hom_count(complete_graph(n), complete_graph(n)) == factorial;
    }
    v.pass = worst <= 1e-12 && factorials && patterns.size() == 53;
    v.detail = std::to_string(patterns.size()) + " patterns x 100 targets, max rel err " + fmt("%.2e", worst) +
               ", hom(K_n,K_n) = n! " + (factorials ? "ok" : "WRONG");
    return v;
}

Verdict spectral_identity() {
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
        const WeightedGraph w = random_target(i, 202);
        for (int k = 3; k <= 8; ++k)
            worst = std::max(worst, relative_gap(cycle_density_spectral(k, w), density(cycle_graph(k), w)));
    }
    return {worst <= 1e-9, "k = 3..8 x 200 targets, max rel err " + fmt("%.2e", worst)};
}

Verdict inequality_suites() {
    Verdict v;
    int failures = 0, skipped = 0;
    std::string failing;
    for (Suite s : all_suites()) {
        const SuiteReport r = run_suite(s, 200, 20240601);
        failures += static_cast<int>(r.failures.size());
        skipped += r.skipped;
        if (!r.failures.empty()) failing += " " + r.suite;
    }
    v.pass = failures == 0;
    v.detail = std::to_string(all_suites().size()) + " suites x 200 trials, " + std::to_string(failures) + " failures, " +
               std::to_string(skipped) + " skipped" + (failing.empty() ? "" : ";" + failing);
    return v;
}

Verdict construction_certification() {
    Verdict v;
    struct Row {
        const char* label;
        const char* g;
        const char* h;
        const char* family;
        double scale;
        double claimed;
        std::function<bool(double)> ok;
    };
    const std::vector<Row> rows = {
        {"(C3,C4) two_clique = 3/2", "C3", "C4", "two_clique", 2, 1.5, [](double r) { return std::abs(r - 1.5) <= 1e-12; }},
        {"(paw,C4) paw_family >= 1.30 at 1e6", "paw", "C4", "paw_family", 1e6, 4.0 / 3, [](double r) { return r >= 1.30; }},
        {"(P1,P2) constant_p = 2", "P1", "P2", "constant_p:0.5", 2, 2, [](double r) { return std::abs(r - 2) <= 1e-12; }},
        {"(K3,K2) constant_p = 2/3", "K3", "K2", "constant_p:0.5", 2, 2.0 / 3,
         [](double r) { return std::abs(r - 2.0 / 3) <= 1e-12; }},
    };
    for (const Row& row : rows) {
        const auto report = certify_lower_bound(parse_graph_spec(row.g), parse_graph_spec(row.h), parse_family(row.family),
                                                {row.scale}, row.claimed);
        const bool ok = report.achieved && row.ok(*report.achieved);
        v.pass = v.pass && ok;
        v.detail += std::string("\n      ") + (ok ? "ok   " : "red  ") + row.label + ": achieved " +
                    (report.achieved ? fmt("%.10f", *report.achieved) : "none") + ", gap " +
                    (report.gap ? fmt("%.3e", *report.gap) : "none");
    }
    // looped star: ratio -> (|V(H)| - alpha(H)) / (|V(G)| - alpha(G))
    const double n = 1e6;
    const double tolerance = 10 / std::log(n);
    const std::pair<const char*, const char*> pairs[] = {{"C4", "K2"}, {"C5", "P1"}, {"K4", "K3"}, {"paw", "C4"}, {"P3", "K[2,2]"}};
    bool star_ok = true;
    double worst = 0;
    for (auto [gs, hs] : pairs) {
        const Graph g = parse_graph_spec(gs), h = parse_graph_spec(hs);
        const double expected = static_cast<double>(h.vertex_count() - independence_number(h)) /
                                (g.vertex_count() - independence_number(g));
        const auto report = certify_lower_bound(g, h, parse_family("looped_star"), {n}, expected);
        const double gap = report.achieved ? std::abs(*report.achieved - expected) : INFINITY;
        worst = std::max(worst, gap);
        star_ok = star_ok && gap <= tolerance;
    }
    v.pass = v.pass && star_ok;
    v.detail += std::string("\n      ") + (star_ok ? "ok   " : "red  ") + "looped_star at 1e6, 5 pairs: max |ratio - expected| " +
                fmt("%.4f", worst) + " (tolerance " + fmt("%.4f", tolerance) + ")";
    return v;
}

Verdict catalog_table() {
    struct Entry {
        const char* g;
        const char* h;
        RhoStatus status;
        std::optional<Rational> lower, upper;
        const char* tag;
    };
    const Entry table[] = {
        {"P1", "P2", RhoStatus::exact, Rational(2), Rational(2), "path-exponents"},
        {"P2", "P3", RhoStatus::exact, Rational(2), Rational(2), "path-exponents"},
        {"P3", "P2", RhoStatus::exact, Rational(3, 4), Rational(3, 4), "path-exponents"},
        {"C5", "C4", RhoStatus::exact, Rational(4, 5), Rational(4, 5), "even-cycle-spectral"},
        {"C4", "P2", RhoStatus::exact, Rational(3, 4), Rational(3, 4), "cycle-path"},
        {"C3", "P4", RhoStatus::exact, Rational(2), Rational(2), "cycle-path"},
        {"P2", "C4", RhoStatus::exact, Rational(2), Rational(2), "path-even-cycle"},
        {"K3", "K2", RhoStatus::exact, Rational(2, 3), Rational(2, 3), "kruskal-katona"},
        {"K[2,1]", "K[3,2]", RhoStatus::exact, Rational(3), Rational(3), "complete-bipartite"},
        {"K3", "Khub[1,1,1]", RhoStatus::exact, Rational(4), Rational(4), "hub-clique"},
        {"K[2,2,1]", "K[3,1,1]", RhoStatus::exact, Rational(1), Rational(1), "multipartite-majorization"},
        {"K2", "K3", RhoStatus::infinite, std::nullopt, std::nullopt, "hom-finiteness"},
        {"C3", "C4", RhoStatus::interval, Rational(3, 2), Rational(8, 5), "triangle-square"},
        {"P5", "P3", RhoStatus::interval, Rational(7, 10), Rational(3, 4), "p5-p3-interval"},
    };
    Verdict v;
    int good = 0;
    for (const Entry& e : table) {
        const RhoResult r = rho_exact(e.g, e.h);
        bool ok = r.status == e.status && r.lower == e.lower && r.upper == e.upper &&
                  std::find(r.provenance.begin(), r.provenance.end(), e.tag) != r.provenance.end();
        if (e.status == RhoStatus::exact) ok = ok && r.value == e.lower;
        if (ok) {
            ++good;
        } else {
            v.pass = false;
            v.detail += std::string(" mismatch (") + e.g + "," + e.h + ")";
        }
    }
    v.detail = std::to_string(good) + "/" + std::to_string(std::size(table)) + " entries" + v.detail;
    return v;
}

// Raw polynomial with masses off the simplex allowed.
double polynomial(const Graph& g, const std::vector<double>& masses, const std::vector<double>& weights, int k) {
    const int n = g.vertex_count();
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    double total = 0;
    while (true) {
        double term = 1;
        for (int v = 0; v < n; ++v) term *= masses[static_cast<std::size_t>(a[static_cast<std::size_t>(v)])];
        for (auto [u, v] : g.edges())
            term *= weights[static_cast<std::size_t>(a[static_cast<std::size_t>(u)] * k + a[static_cast<std::size_t>(v)])];
        total += term;
        int p = 0;
        while (p < n && ++a[static_cast<std::size_t>(p)] == k) a[static_cast<std::size_t>(p++)] = 0;
        if (p == n) break;
    }
    return total;
}

Verdict gradient_check() {
    Rng rng(606);
    const double h = 1e-6;
    double worst = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rng.integer(2, 5);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.coin(0.6)) edges.emplace_back(u, v);
        if (edges.empty()) edges.emplace_back(0, 1);
        const Graph g(n, edges);
        const WeightedGraph w = sample_weighted_graph(kAllProfiles[trial % 5], rng.integer(2, 4), rng.next());
        const int k = w.block_count();
        const DensityGradient grad = density_gradient(g, w);
        const std::vector<double> masses(w.masses().begin(), w.masses().end());
        const std::vector<double> weights(w.weights().begin(), w.weights().end());
        auto error = [](double analytic, double numeric) {
            const double scale = std::max(std::abs(analytic), std::abs(numeric));
            // below 1e-6 the central difference itself carries ~1e-10 rounding
            return scale < 1e-6 ? std::abs(analytic - numeric) : std::abs(analytic - numeric) / scale;
        };
        for (int i = 0; i < k; ++i) {
            for (int j = i; j < k; ++j) {
                auto shifted = [&](double d) {
                    auto wt = weights;
                    wt[static_cast<std::size_t>(i * k + j)] += d;
                    if (i != j) wt[static_cast<std::size_t>(j * k + i)] += d;
                    return polynomial(g, masses, wt, k);
                };
                const double fd = (shifted(h) - shifted(-h)) / (2 * h);
                worst = std::max(worst, error(grad.weights[static_cast<std::size_t>(i * k + j)], fd));
            }
            auto shifted = [&](double d) {
                auto m = masses;
                m[static_cast<std::size_t>(i)] += d;
                return polynomial(g, m, weights, k);
            };
            const double fd = (shifted(h) - shifted(-h)) / (2 * h);
            worst = std::max(worst, error(grad.masses[static_cast<std::size_t>(i)], fd));
        }
    }
    return {worst <= 1e-5, "50 instances, max rel err " + fmt("%.2e", worst)};
}

Verdict search_sanity() {
    Verdict v;
    try {
        const SearchResult tri = search_lower_bound(cycle_graph(3), cycle_graph(4));
        const SearchResult paths = search_lower_bound(path_graph(5), path_graph(3));
        v.pass = tri.best_ratio >= 1.49 && tri.best_ratio <= 1.6 + 1e-6 && paths.best_ratio <= 0.75 + 1e-6;
        v.detail = "(C3,C4) best " + fmt("%.10f", tri.best_ratio) + ", (P5,P3) best " + fmt("%.10f", paths.best_ratio);
    } catch (const Error& e) {
        v.pass = false;
        v.detail = e.what();
    }
    return v;
}

std::vector<PartSizes> partitions(int total, int max_parts, int max_part) {
    std::vector<PartSizes> out;
    if (total == 0) return {PartSizes{}};
    if (max_parts == 0) return out;
    for (int first = std::min(total, max_part); first >= 1; --first)
        for (PartSizes rest : partitions(total - first, max_parts - 1, first)) {
            rest.insert(rest.begin(), first);
            out.push_back(rest);
        }
    return out;
}

Verdict majorization() {
    std::vector<PartSizes> all = partitions(10, 5, 10);
    for (auto& p : all) p.resize(5, 0);
    int pairs = 0, bad_chains = 0, bad_residuals = 0, skipped = 0;
    for (const auto& a : all) {
        for (const auto& b : all) {
            if (a == b || !majorizes(a, b)) continue;
            ++pairs;
            const auto chain = majorization_chain(a, b);
            bool ok = chain.size() >= 2 && chain.front() == a && chain.back() == b;
            for (std::size_t i = 1; ok && i < chain.size(); ++i) {
                int plus = 0, minus = 0, changed = 0;
                for (std::size_t j = 0; j < chain[i].size(); ++j) {
                    const int d = chain[i][j] - chain[i - 1][j];
                    changed += d != 0;
                    plus += d == 1;
                    minus += d == -1;
                }
                ok = changed == 2 && plus == 1 && minus == 1 && majorizes(chain[i - 1], chain[i]);
            }
            bad_chains += !ok;
            const Graph ka = complete_multipartite(a), kb = complete_multipartite(b);
            for (int t = 0; t < 50; ++t) {
                const WeightedGraph w = random_target(t, static_cast<std::uint64_t>(pairs) * 977);
                const double lb = log_density(kb, w);
                if (lb == -INFINITY) {
                    ++skipped;
                    continue;
                }
                const double la = log_density(ka, w);
                if (la - lb < -1e-9 * (1 + std::abs(la))) ++bad_residuals;
            }
        }
    }
    return {bad_chains == 0 && bad_residuals == 0 && pairs > 0,
            std::to_string(all.size()) + " partitions, " + std::to_string(pairs) + " ordered pairs, " +
                std::to_string(bad_chains) + " bad chains, " + std::to_string(bad_residuals) + " negative residuals, " +
                std::to_string(skipped) + " skipped"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_seconds;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {1, "oracle equivalence", 120, oracle_equivalence},
        {2, "spectral identity", 30, spectral_identity},
        {3, "inequality suites", 600, inequality_suites},
        {4, "construction certification", 60, construction_certification},
        {5, "catalog spot table", 60, catalog_table},
        {6, "gradient check", 30, gradient_check},
        {7, "search sanity", 300, search_sanity},
        {8, "majorization", 120, majorization},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds <= c.budget_seconds;
        const bool pass = v.pass && in_time;
        failed += !pass;
        std::printf("%s  %d %-27s %7.2fs / %4.0fs  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, seconds, c.budget_seconds,
                    v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria pass\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
