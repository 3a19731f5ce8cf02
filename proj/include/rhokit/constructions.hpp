#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rhokit/graph.hpp"

namespace rhokit {

enum class ConstructionKind {
    constant_p,           // params {p}: one block, weight p
    half_block,           // weight 1 on one half, 0 elsewhere
    two_clique,           // two disjoint halves, each complete with loops
    looped_star,          // K_{1,n} with a looped centre
    paw_family,           // n-1 vertices at weight n^{-1/2} plus a looped universal vertex
    clique_pendant_star,  // params {t}: clique of floor(n^{t/(t+1)}) with n pendants on one vertex
    looped_vertex,        // one looped vertex among n - 1 isolated ones
    kpartite_unbalanced,  // params {k, i}: complete k-partite, i parts of mass n, k - i of mass 1
};

std::string_view to_string(ConstructionKind kind);
std::optional<ConstructionKind> parse_construction_kind(std::string_view name);

struct ConstructionFamily {
    ConstructionKind kind = ConstructionKind::constant_p;
    std::vector<double> params;
};

// Number of entries `params` must have.
int parameter_count(ConstructionKind kind);
// Whether the scale n changes the graphon.
bool uses_scale(ConstructionKind kind);

// "kind" or "kind:p1,p2,...". Throws ParseError or DomainError.
ConstructionFamily parse_family(std::string_view text);
std::string render(const ConstructionFamily& family);

// The step graphon at scale n. Throws DomainError on invalid parameters or a
// scale too small for the family (n >= 2 where a block would vanish).
WeightedGraph build_construction(const ConstructionFamily& family, double n);

struct CertificateRow {
    double scale = 0;
    double t_g = 0;
    double t_h = 0;
    double log_t_g = 0;
    double log_t_h = 0;
    std::optional<double> ratio;  // absent when t(G, W) is 0 or 1
};

struct CertificateReport {
    std::vector<CertificateRow> schedule;
    double claimed = 0;
    std::optional<double> achieved;  // best ratio over the usable scales
    std::optional<double> gap;       // claimed - achieved
    std::vector<double> degenerate_scales;
};

// Evaluates log t(H, W_n) / log t(G, W_n) at every scale. Degenerate scales
// are recorded and skipped.
CertificateReport certify_lower_bound(const Graph& g, const Graph& h, const ConstructionFamily& family,
                                      const std::vector<double>& scales, double claimed);

}  // namespace rhokit
