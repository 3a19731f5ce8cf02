#include "rhokit/constructions.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "rhokit/density.hpp"
#include "rhokit/error.hpp"

namespace rhokit {

namespace {

struct KindInfo {
    ConstructionKind kind;
    std::string_view name;
    int params;
    bool scaled;
};

constexpr std::array<KindInfo, 8> kKinds{{
    {ConstructionKind::constant_p, "constant_p", 1, false},
    {ConstructionKind::half_block, "half_block", 0, false},
    {ConstructionKind::two_clique, "two_clique", 0, false},
    {ConstructionKind::looped_star, "looped_star", 0, true},
    {ConstructionKind::paw_family, "paw_family", 0, true},
    {ConstructionKind::clique_pendant_star, "clique_pendant_star", 1, true},
    {ConstructionKind::looped_vertex, "looped_vertex", 0, true},
    {ConstructionKind::kpartite_unbalanced, "kpartite_unbalanced", 2, true},
}};

const KindInfo& info(ConstructionKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k;
    throw DomainError("unknown construction kind");
}

int as_count(double value, const char* what) {
    if (!(value >= 1) || value != std::floor(value) || value > 1e6)
        throw DomainError(std::string(what) + " must be a positive integer");
    return static_cast<int>(value);
}

WeightedGraph from_blocks(std::vector<double> masses, std::vector<std::vector<double>> rows) {
    std::vector<double> weights;
    for (const auto& row : rows) weights.insert(weights.end(), row.begin(), row.end());
    return WeightedGraph::normalized(std::move(masses), std::move(weights));
}

}  // namespace

std::string_view to_string(ConstructionKind kind) { return info(kind).name; }

std::optional<ConstructionKind> parse_construction_kind(std::string_view name) {
    for (const auto& k : kKinds)
        if (k.name == name) return k.kind;
    return std::nullopt;
}

int parameter_count(ConstructionKind kind) { return info(kind).params; }
bool uses_scale(ConstructionKind kind) { return info(kind).scaled; }

ConstructionFamily parse_family(std::string_view text) {
    const auto colon = text.find(':');
    const auto name = text.substr(0, colon);
    const auto kind = parse_construction_kind(name);
    if (!kind) throw ParseError("unknown construction family '" + std::string(name) + "'", 0);
    ConstructionFamily family{*kind, {}};
    if (colon != std::string_view::npos) {
        std::size_t pos = colon + 1;
        while (pos <= text.size()) {
            const auto end = std::min(text.find(',', pos), text.size());
            const std::string token(text.substr(pos, end - pos));
            std::size_t used = 0;
            double value = 0;
            try {
                value = std::stod(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != token.size()) throw ParseError("expected a number", pos);
            family.params.push_back(value);
            pos = end + 1;
        }
    }
    if (static_cast<int>(family.params.size()) != parameter_count(*kind))
        throw DomainError("family '" + std::string(name) + "' takes " + std::to_string(parameter_count(*kind)) +
                          " parameter(s)");
    return family;
}

std::string render(const ConstructionFamily& family) {
    std::ostringstream out;
    out << to_string(family.kind);
    for (std::size_t i = 0; i < family.params.size(); ++i) out << (i ? ',' : ':') << family.params[i];
    return out.str();
}

WeightedGraph build_construction(const ConstructionFamily& family, double n) {
    if (static_cast<int>(family.params.size()) != parameter_count(family.kind))
        throw DomainError("wrong number of construction parameters");
    if (!(n >= 1) || !std::isfinite(n)) throw DomainError("construction scale must be at least 1");
    switch (family.kind) {
    case ConstructionKind::constant_p: {
        const double p = family.params[0];
        if (!(p > 0 && p <= 1)) throw DomainError("constant_p needs 0 < p <= 1");
        return WeightedGraph({1.0}, {p});
    }
    case ConstructionKind::half_block:
        return WeightedGraph({0.5, 0.5}, {1, 0, 0, 0});
    case ConstructionKind::two_clique:
        return WeightedGraph({0.5, 0.5}, {1, 0, 0, 1});
    case ConstructionKind::looped_star:
        return from_blocks({1.0, n}, {{1, 1}, {1, 0}});
    case ConstructionKind::paw_family: {
        if (n < 2) throw DomainError("paw_family needs n >= 2");
        const double w = 1.0 / std::sqrt(n);
        return from_blocks({n - 1, 1.0}, {{w, 1}, {1, 1}});
    }
    case ConstructionKind::clique_pendant_star: {
        const int t = as_count(family.params[0], "star size t");
        const double clique = std::floor(std::pow(n, static_cast<double>(t) / (t + 1)));
        if (clique >= 2) {
            return from_blocks({1.0, clique - 1, n}, {{1, 1, 1}, {1, 1, 0}, {1, 0, 0}});
        }
        return from_blocks({1.0, n}, {{1, 1}, {1, 0}});
    }
    case ConstructionKind::looped_vertex:
        if (n < 2) throw DomainError("looped_vertex needs n >= 2");
        return from_blocks({1.0, n - 1}, {{1, 0}, {0, 0}});
    case ConstructionKind::kpartite_unbalanced: {
        const int k = as_count(family.params[0], "part count k");
        const double big = family.params[1];
        if (!(big >= 0 && big <= k) || big != std::floor(big)) throw DomainError("need 0 <= i <= k");
        std::vector<double> masses;
        std::vector<std::vector<double>> rows;
        for (int p = 0; p < k; ++p) {
            masses.push_back(p < static_cast<int>(big) ? n : 1.0);
            std::vector<double> row(static_cast<std::size_t>(k), 1.0);
            row[static_cast<std::size_t>(p)] = 0.0;
            rows.push_back(std::move(row));
        }
        return from_blocks(std::move(masses), std::move(rows));
    }
    }
    throw DomainError("unknown construction kind");
}

CertificateReport certify_lower_bound(const Graph& g, const Graph& h, const ConstructionFamily& family,
                                      const std::vector<double>& scales, double claimed) {
    CertificateReport report;
    report.claimed = claimed;
    for (double scale : scales) {
        const WeightedGraph w = build_construction(family, scale);
        CertificateRow row;
        row.scale = scale;
        row.log_t_g = log_density(g, w);
        row.log_t_h = log_density(h, w);
        row.t_g = std::exp(row.log_t_g);
        row.t_h = std::exp(row.log_t_h);
        if (std::isfinite(row.log_t_g) && row.log_t_g < 0) {
            row.ratio = row.log_t_h / row.log_t_g;
            if (!report.achieved || *row.ratio > *report.achieved) report.achieved = row.ratio;
        } else {
            report.degenerate_scales.push_back(scale);
        }
        report.schedule.push_back(row);
    }
    if (report.achieved) report.gap = claimed - *report.achieved;
    return report;
}

}  // namespace rhokit
