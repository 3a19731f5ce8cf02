#include "rhokit/rho.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "rhokit/density.hpp"
#include "rhokit/error.hpp"
#include "rhokit/families.hpp"

namespace rhokit {

std::string_view to_string(RhoStatus status) {
    switch (status) {
    case RhoStatus::exact: return "exact";
    case RhoStatus::interval: return "interval";
    case RhoStatus::conjectured: return "conjectured";
    case RhoStatus::infinite: return "infinite";
    case RhoStatus::unknown: return "unknown";
    }
    return "unknown";
}

double RhoResult::lower_value() const {
    if (status == RhoStatus::infinite || !lower) return std::numeric_limits<double>::infinity();
    return lower->to_double();
}

namespace {

// Families a pattern belongs to. Several can hold at once (K2 = P1 = S1).
struct Shape {
    std::optional<int> path;       // edges
    std::optional<int> cycle;      // length
    std::optional<int> complete;   // vertices, >= 2
    std::optional<PartSizes> parts;
    std::optional<int> star;       // leaves
    std::optional<std::vector<int>> hub;
    bool paw = false;
};

struct Pattern {
    Graph graph;
    Shape shape;
};

Shape recognize(const Graph& g) {
    Shape s;
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m == 0) return s;
    int max_degree = 0;
    bool all_two = true;
    for (Vertex v = 0; v < n; ++v) {
        max_degree = std::max(max_degree, g.degree(v));
        all_two = all_two && g.degree(v) == 2;
    }
    const bool connected = g.connected();
    if (connected && m == n - 1 && max_degree <= 2) s.path = m;
    if (connected && n >= 3 && all_two) s.cycle = n;
    if (n >= 2 && m == n * (n - 1) / 2) s.complete = n;
    s.parts = complete_multipartite_parts(g);
    if (s.parts && s.parts->size() == 2 && (*s.parts)[1] == 1) s.star = (*s.parts)[0];
    if (n == 4 && m == 4) {
        std::vector<int> degrees;
        for (Vertex v = 0; v < n; ++v) degrees.push_back(g.degree(v));
        std::sort(degrees.begin(), degrees.end());
        s.paw = degrees == std::vector<int>{1, 2, 2, 3};
    }
    return s;
}

Pattern make_pattern(Graph g) {
    Pattern p{std::move(g), {}};
    p.shape = recognize(p.graph);
    return p;
}

Pattern make_pattern(const GraphSpec& spec) {
    Pattern p = make_pattern(to_graph(spec));
    if (spec.kind == GraphSpec::Kind::hub) {
        bool plain_clique = true;
        for (int a : spec.params) plain_clique = plain_clique && a == 0;
        if (!plain_clique) p.shape.hub = spec.params;
    }
    return p;
}

bool identical(const Pattern& g, const Pattern& h) {
    if (g.graph == h.graph) return true;
    const Shape& a = g.shape;
    const Shape& b = h.shape;
    if (g.graph.vertex_count() != h.graph.vertex_count() || g.graph.edge_count() != h.graph.edge_count()) return false;
    if (a.path && a.path == b.path) return true;
    if (a.cycle && a.cycle == b.cycle) return true;
    if (a.complete && a.complete == b.complete) return true;
    if (a.parts && a.parts == b.parts) return true;
    if (a.hub && a.hub == b.hub) return true;
    return a.paw && b.paw;
}

struct Hit {
    Rational lower;
    std::optional<Rational> upper;
    std::optional<Rational> conjectured;
    std::string tag;
    bool fixed = false;

    bool exact() const { return upper && *upper == lower && !conjectured; }
};

Hit exact_hit(Rational value, std::string tag) { return Hit{value, value, std::nullopt, std::move(tag)}; }

void path_rules(int m, int n, std::vector<Hit>& hits) {
    const bool n_odd = n % 2 == 1;
    const bool m_odd = m % 2 == 1;
    if (n > m && !n_odd) return hits.push_back(exact_hit(Rational(n, m), "path-exponents"));
    if (n > m && n_odd && m_odd) return hits.push_back(exact_hit(Rational(n, m), "path-exponents"));
    if (n_odd && !m_odd) return hits.push_back(exact_hit(Rational(n + 1, m), "path-exponents"));
    if (n < m && !n_odd) return hits.push_back(exact_hit(Rational(n + 1, m + 1), "path-exponents"));
    if (n < m && n_odd && m_odd) {
        if ((m + 1) % (n + 1) == 0) return hits.push_back(exact_hit(Rational(n + 1, m + 1), "path-exponents"));
        if (m == 5 && n == 3) {
            hits.push_back(Hit{Rational(7, 10), Rational(3, 4), std::nullopt, "p5-p3-interval", true});
            return;
        }
        int shorter = m;
        while ((shorter + 1) % (n + 1) != 0) shorter -= 2;
        hits.push_back(Hit{Rational(0), Rational(n + 1, shorter + 1), std::nullopt, "paths-open-interval"});
    }
}

void cycle_rules(int a, int b, std::vector<Hit>& hits) {
    if (b % 2 == 0) {
        if (a > b) {
            hits.push_back(exact_hit(Rational(b, a), "even-cycle-spectral"));
        } else if (a < b) {
            hits.push_back(Hit{Rational(b - 1, a - 1), Rational(b * (b - 2), a * b - b - a), std::nullopt,
                               "even-cycle-holder"});
        }
        if (a == 3 && b == 4) hits.push_back(Hit{Rational(3, 2), Rational(8, 5), std::nullopt, "triangle-square", true});
        return;
    }
    if (a % 2 == 1 && b > a) {
        const int k = (a - 1) / 2;
        const int n = (b - 1) / 2;
        const Rational ratio(n, k);
        hits.push_back(Hit{ratio, Rational(ratio.ceil() + 1), std::nullopt, "odd-cycle-tail"});
    }
}

void bipartite_rules(const PartSizes& g, const PartSizes& h, std::vector<Hit>& hits) {
    const int a1 = g[0], a2 = g[1], b1 = h[0], b2 = h[1];
    const std::string tag = "complete-bipartite";
    if (b1 >= a1 && b2 >= a2) return hits.push_back(exact_hit(Rational(b1 * b2, a1 * a2), tag));
    if (b1 <= a1 && b2 >= a2) return hits.push_back(exact_hit(Rational(b2, a2), tag));
    if (b1 <= a1 && b2 <= a2)
        return hits.push_back(exact_hit(max(Rational(b2, a2), Rational(b1 + b2, a1 + a2)), tag));
    if (b1 >= a1 && b2 <= a2 && b1 + b2 <= a1 + a2)
        return hits.push_back(exact_hit(Rational(b1 + b2, a1 + a2), tag));
    if (b1 >= a1 && b2 == 1 && b1 + b2 >= a1 + a2)
        return hits.push_back(exact_hit(Rational(b1, a1 + a2 - 1), tag));
    if (a2 >= b2 && b2 > 1 && a1 <= b1 && b1 + b2 >= a1 + a2) {
        Hit hit{Rational(0), std::nullopt, max(Rational(b1 * b2, a1 * a2), Rational(b1 + b2 - 1, a1 + a2 - 1)),
                "complete-bipartite-conjecture"};
        hits.push_back(hit);
    }
}

// Family rules in dispatch order. Every rule that fires implies finiteness.
std::vector<Hit> family_rules(const Pattern& gp, const Pattern& hp, const EngineLimits& limits) {
    const Shape& g = gp.shape;
    const Shape& h = hp.shape;
    std::vector<Hit> hits;
    if (g.complete && h.complete && *g.complete >= *h.complete)
        hits.push_back(exact_hit(Rational(*h.complete, *g.complete), "kruskal-katona"));
    if (g.path && h.path && g.path != h.path) path_rules(*g.path, *h.path, hits);
    if (g.cycle && h.cycle && g.cycle != h.cycle) cycle_rules(*g.cycle, *h.cycle, hits);
    if (g.cycle && h.path) {
        const int m = *g.cycle;
        const int n = *h.path;
        hits.push_back(exact_hit(n <= m - 1 ? Rational(n + 1, m) : Rational(n, m - 1), "cycle-path"));
    }
    if (g.path && h.cycle && *h.cycle % 2 == 0 && *h.cycle > 2)
        hits.push_back(exact_hit(Rational(*h.cycle, *g.path), "path-even-cycle"));
    if (h.star) {
        const int t = *h.star;
        const int size = gp.graph.vertex_count();
        if (gp.graph.connected() && size <= t + 1) hits.push_back(exact_hit(Rational(t, size - 1), "star-spanning-tree"));
        try {
            if (t == 1) {
                hits.push_back(exact_hit(Rational(2, size - delta_index(gp.graph, 1, limits)), "edge-delta"));
            } else if (size >= t + 1) {
                hits.push_back(Hit{Rational(t + 1, size - delta_index(gp.graph, t, limits)), std::nullopt,
                                   std::nullopt, "star-delta-lower"});
            }
        } catch (const CapExceeded&) {
            // too many vertices for the subset brute force: rule skipped
        }
    }
    if (g.parts && h.parts && g.parts->size() == 2 && h.parts->size() == 2) bipartite_rules(*g.parts, *h.parts, hits);
    if (g.parts && h.parts && g.parts->size() == h.parts->size()) {
        const int total_g = std::accumulate(g.parts->begin(), g.parts->end(), 0);
        const int total_h = std::accumulate(h.parts->begin(), h.parts->end(), 0);
        if (total_g == total_h && majorizes(*h.parts, *g.parts))
            hits.push_back(exact_hit(Rational(1), "multipartite-majorization"));
    }
    if (g.complete && h.hub && static_cast<int>(h.hub->size()) == *g.complete) {
        const int total = std::accumulate(h.hub->begin(), h.hub->end(), 0);
        hits.push_back(exact_hit(Rational(1 + total), "hub-clique"));
    }
    if (g.paw && h.cycle == 4) hits.push_back(exact_hit(Rational(4, 3), "paw-square"));
    return hits;
}

// Smallest upper bound the family rules alone give, used for composition.
std::optional<Rational> rule_upper(const Pattern& g, const Pattern& h, const EngineLimits& limits) {
    if (identical(g, h)) return Rational(1);
    if (h.graph.empty()) return Rational(0);
    std::optional<Rational> best;
    for (const Hit& hit : family_rules(g, h, limits))
        if (hit.upper && (!best || *hit.upper < *best)) best = hit.upper;
    return best;
}

const std::vector<Pattern>& intermediates() {
    static const std::vector<Pattern> list = [] {
        std::vector<Pattern> out;
        for (int m = 1; m <= 8; ++m) out.push_back(make_pattern(path_graph(m)));
        for (int m = 3; m <= 8; ++m) out.push_back(make_pattern(cycle_graph(m)));
        for (int n = 3; n <= 5; ++n) out.push_back(make_pattern(complete_graph(n)));
        for (int t = 3; t <= 5; ++t) out.push_back(make_pattern(star_graph(t)));
        out.push_back(make_pattern(paw_graph()));
        return out;
    }();
    return list;
}

std::optional<Rational> composition_upper(const Pattern& g, const Pattern& h, const EngineLimits& limits) {
    std::optional<Rational> best;
    for (const Pattern& j : intermediates()) {
        if (identical(j, g) || identical(j, h)) continue;
        const auto first = rule_upper(g, j, limits);
        if (!first) continue;
        const auto second = rule_upper(j, h, limits);
        if (!second) continue;
        const Rational candidate = *first * *second;
        if (!best || candidate < *best) best = candidate;
    }
    return best;
}

RhoResult exact_result(Rational value, std::vector<std::string> provenance) {
    RhoResult r;
    r.status = RhoStatus::exact;
    r.value = r.lower = r.upper = value;
    r.provenance = std::move(provenance);
    return r;
}

RhoResult evaluate(const Pattern& g, const Pattern& h, const EngineLimits& limits) {
    if (g.graph.empty()) throw DomainError("rho(G, H) needs G to have at least one edge");
    if (identical(g, h)) return exact_result(Rational(1), {"identity"});
    if (h.graph.empty()) return exact_result(Rational(0), {"edgeless-target"});
    if (!finiteness(g.graph, h.graph, limits)) {
        RhoResult r;
        r.status = RhoStatus::infinite;
        r.provenance = {"hom-finiteness"};
        return r;
    }
    const auto hits = family_rules(g, h, limits);
    std::vector<std::string> tags;
    for (const Hit& hit : hits)
        if (std::find(tags.begin(), tags.end(), hit.tag) == tags.end()) tags.push_back(hit.tag);
    for (const Hit& hit : hits)
        if (hit.exact()) return exact_result(hit.lower, tags);

    RhoResult r;
    const Rational glb = general_lower_bounds(g.graph, h.graph);
    bool fixed = false;
    std::optional<Rational> rule_lower;
    std::optional<Rational> conjectured;
    for (const Hit& hit : hits) {
        if (!rule_lower || *rule_lower < hit.lower) rule_lower = hit.lower;
        if (hit.upper && (!r.upper || *hit.upper < *r.upper)) r.upper = hit.upper;
        if (hit.conjectured) conjectured = hit.conjectured;
        fixed = fixed || hit.fixed;
    }
    r.lower = glb;
    if (rule_lower && glb < *rule_lower) {
        r.lower = rule_lower;
    } else if (!rule_lower || *rule_lower < glb) {
        tags.push_back("general-lower-bounds");
    }
    if (!fixed) {
        if (auto blowup = blowup_upper_bound(g.graph, h.graph, limits); blowup && (!r.upper || *blowup < *r.upper)) {
            r.upper = blowup;
            tags.push_back("blowup-upper-bound");
        }
        if (auto composed = composition_upper(g, h, limits); composed && (!r.upper || *composed < *r.upper)) {
            r.upper = composed;
            tags.push_back("composition");
        }
    }
    r.provenance = std::move(tags);
    if (conjectured) {
        r.status = RhoStatus::conjectured;
        r.value = conjectured;
    } else if (r.upper && *r.upper == *r.lower) {
        r.status = RhoStatus::exact;
        r.value = r.lower;
    } else {
        r.status = hits.empty() ? RhoStatus::unknown : RhoStatus::interval;
    }
    return r;
}

RhoResult scaled(RhoResult r, Rational factor) {
    if (r.value) r.value = *r.value * factor;
    if (r.lower) r.lower = *r.lower * factor;
    if (r.upper) r.upper = *r.upper * factor;
    r.provenance.push_back("disjoint-copies-scaling");
    return r;
}

}  // namespace

bool finiteness(const Graph& g, const Graph& h, const EngineLimits& limits) {
    if (g.empty()) throw DomainError("finiteness needs G to have at least one edge");
    try {
        return hom_count(h, g, DensityMethod::automatic, limits) > 0;
    } catch (const NumericError&) {
        return true;  // count overflowed, so it is positive
    }
}

bool majorizes(PartSizes a, PartSizes b) {
    const std::size_t length = std::max(a.size(), b.size());
    a.resize(length, 0);
    b.resize(length, 0);
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    long long sa = 0;
    long long sb = 0;
    for (std::size_t i = 0; i < length; ++i) {
        if (a[i] < 0 || b[i] < 0) throw DomainError("part sizes must be nonnegative");
        sa += a[i];
        sb += b[i];
    }
    if (sa != sb) throw DomainError("majorization needs equal totals");
    sa = sb = 0;
    for (std::size_t i = 0; i < length; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return true;
}

std::vector<PartSizes> majorization_chain(PartSizes a, PartSizes b) {
    if (!majorizes(a, b)) throw DomainError("majorization chain needs a to majorize b");
    const std::size_t length = std::max(a.size(), b.size());
    a.resize(length, 0);
    b.resize(length, 0);
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    // Walk from b up to a, then reverse.
    std::vector<PartSizes> chain{b};
    PartSizes current = b;
    while (current != a) {
        std::size_t r = 0;
        while (current[r] == a[r]) ++r;
        const int target = current[r + 1];
        std::size_t s = r + 1;
        for (std::size_t i = r + 1; i < length; ++i)
            if (current[i] == target) s = i;
        ++current[r];
        --current[s];
        chain.push_back(current);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

Rational general_lower_bounds(const Graph& g, const Graph& h) {
    if (g.empty()) throw DomainError("general lower bounds need G to have at least one edge");
    if (h.empty()) return Rational(0);
    Rational best(h.edge_count(), g.edge_count());
    best = max(best, Rational(h.non_isolated_count(), g.non_isolated_count()));
    if (g.connected() && h.connected())
        best = max(best, Rational(h.vertex_count() - 1, g.vertex_count() - 1));
    const int dg = g.vertex_count() - independence_number(g);
    const int dh = h.vertex_count() - independence_number(h);
    if (dg > 0 && dh > 0) best = max(best, Rational(dh, dg));
    return best;
}

std::optional<Rational> blowup_upper_bound(const Graph& g, const Graph& h, const EngineLimits& limits) {
    const int nh = h.vertex_count();
    const int ng = g.vertex_count();
    if (ng == 0) return std::nullopt;
    if (nh == 0) return Rational(1);
    // Breadth-first order so each vertex after the first in a component has a
    // mapped neighbour constraining it.
    std::vector<Vertex> order;
    std::vector<char> seen(static_cast<std::size_t>(nh), 0);
    for (Vertex root = 0; root < nh; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = 1;
        std::size_t head = order.size();
        order.push_back(root);
        while (head < order.size()) {
            const Vertex v = order[head++];
            for (Vertex w : h.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    order.push_back(w);
                }
            }
        }
    }
    std::vector<int> image(static_cast<std::size_t>(nh), -1);
    std::vector<int> fiber(static_cast<std::size_t>(ng), 0);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    double visits = 0;
    bool aborted = false;
    auto walk = [&](auto&& self, std::size_t depth, std::uint64_t product) -> void {
        if (aborted || product >= best) return;
        if (++visits > limits.homomorphism_visit_cap) {
            aborted = true;
            return;
        }
        if (depth == order.size()) {
            best = product;
            return;
        }
        const Vertex v = order[depth];
        for (Vertex u = 0; u < ng; ++u) {
            bool ok = true;
            for (Vertex w : h.neighbors(v)) {
                const int iw = image[static_cast<std::size_t>(w)];
                if (iw >= 0 && !g.has_edge(u, iw)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            int& count = fiber[static_cast<std::size_t>(u)];
            std::uint64_t next = product;
            if (count >= 1) {
                next = product / static_cast<std::uint64_t>(count) * static_cast<std::uint64_t>(count + 1);
            }
            ++count;
            image[static_cast<std::size_t>(v)] = u;
            self(self, depth + 1, next);
            image[static_cast<std::size_t>(v)] = -1;
            --count;
        }
    };
    walk(walk, 0, 1);
    if (aborted || best == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return Rational(static_cast<std::int64_t>(best));
}

RhoResult rho_exact(const Graph& g, const Graph& h, const EngineLimits& limits) {
    return evaluate(make_pattern(g), make_pattern(h), limits);
}

RhoResult rho_exact(const GraphSpec& g, const GraphSpec& h, const EngineLimits& limits) {
    const Pattern gp = make_pattern(g);
    const Pattern hp = make_pattern(h);
    if (gp.graph.empty()) throw DomainError("rho(G, H) needs G to have at least one edge");
    if (!identical(gp, hp)) {
        if (g.kind == GraphSpec::Kind::copies)
            return scaled(rho_exact(*g.inner, h, limits), Rational(1, g.params.at(0)));
        if (h.kind == GraphSpec::Kind::copies)
            return scaled(rho_exact(g, *h.inner, limits), Rational(h.params.at(0)));
    }
    return evaluate(gp, hp, limits);
}

RhoResult rho_exact(std::string_view g, std::string_view h, const EngineLimits& limits) {
    return rho_exact(parse_spec(g), parse_spec(h), limits);
}

}  // namespace rhokit
