#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rhokit/constructions.hpp"
#include "rhokit/graph.hpp"
#include "rhokit/rho.hpp"
#include "rhokit/search.hpp"
#include "rhokit/verifier.hpp"

namespace rhokit {

using Json = nlohmann::ordered_json;

// Finite reals as JSON numbers; infinities and NaN as the strings "inf",
// "-inf" and "nan".
Json real_json(double x);
// "%.17g", with the same spellings for non-finite values.
std::string format_real(double x);

Json weighted_graph_json(const WeightedGraph& w);
Json rho_json(const std::string& g, const std::string& h, const RhoResult& r);
Json certificate_json(const std::string& g, const std::string& h, const ConstructionFamily& family,
                      const CertificateReport& report);
Json suite_json(const SuiteReport& report);
Json search_json(const std::string& g, const std::string& h, const SearchResult& result);

// Columns: scale,t_g,t_h,log_t_g,log_t_h,ratio (ratio empty when degenerate).
std::string certificate_csv(const CertificateReport& report);
// Columns: restart,blocks,start,iterations,ratio.
std::string search_csv(const SearchResult& result);
// Columns: suite,trials,skipped,failures,min_residual.
std::string suites_csv(const std::vector<SuiteReport>& reports);

// One <testsuite> per report, one <testcase> per trial that failed plus one
// summarising passes.
std::string suites_junit(const std::vector<SuiteReport>& reports);

}  // namespace rhokit
