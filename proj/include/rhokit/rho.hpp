#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rhokit/graph.hpp"
#include "rhokit/graph_spec.hpp"
#include "rhokit/limits.hpp"
#include "rhokit/rational.hpp"

namespace rhokit {

enum class RhoStatus { exact, interval, conjectured, infinite, unknown };

std::string_view to_string(RhoStatus status);

// What is known about rho(G, H) = sup_W log t(H, W) / log t(G, W).
//   exact:       value == lower == upper
//   interval:    lower <= upper (upper may be absent only for one-sided rules)
//   conjectured: value is the conjectured answer, lower/upper what is proven
//   infinite:    lower, upper and value absent
//   unknown:     no family rule applies; general bounds only
struct RhoResult {
    RhoStatus status = RhoStatus::unknown;
    std::optional<Rational> value;
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    std::vector<std::string> provenance;

    // +infinity when the exponent is infinite.
    double lower_value() const;
};

// Nonincreasing, zero-padded part sizes.
using PartSizes = std::vector<int>;

// hom(H, G) > 0. Throws DomainError when G has no edges.
bool finiteness(const Graph& g, const Graph& h, const EngineLimits& limits = EngineLimits::defaults());

// Prefix-sum dominance after sorting and zero padding. Throws DomainError
// when the totals differ.
bool majorizes(PartSizes a, PartSizes b);

// a = a_0, a_1, ..., a_l = b, each step moving one unit from a later index
// to an earlier one. Throws DomainError unless a majorizes b.
std::vector<PartSizes> majorization_chain(PartSizes a, PartSizes b);

// Best of the four constructions: edge ratio, vertex ratio (non-isolated
// vertices), connected vertex ratio, and |V| - alpha ratio.
Rational general_lower_bounds(const Graph& g, const Graph& h);

// min over homomorphisms phi: H -> G of prod_v max(1, |phi^{-1}(v)|); absent
// when H has no homomorphism into G or the search exceeds the visit cap.
std::optional<Rational> blowup_upper_bound(const Graph& g, const Graph& h,
                                           const EngineLimits& limits = EngineLimits::defaults());

// Catalog lookup with provenance. Throws DomainError when G has no edges.
RhoResult rho_exact(const GraphSpec& g, const GraphSpec& h, const EngineLimits& limits = EngineLimits::defaults());
RhoResult rho_exact(std::string_view g, std::string_view h, const EngineLimits& limits = EngineLimits::defaults());
// Same dispatch on bare graphs; families are recognised structurally, so hub
// graphs and copy scaling are only available through specs.
RhoResult rho_exact(const Graph& g, const Graph& h, const EngineLimits& limits = EngineLimits::defaults());

}  // namespace rhokit
