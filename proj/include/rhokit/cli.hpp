#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rhokit/graph.hpp"

namespace rhokit {

// Exit codes: 0 success, 1 an inequality failed or search hit a
// discrepancy, 2 usage, parse, domain, cap, numeric or I/O errors. Errors are
// written to `err` as {"error": {"code": ..., "message": ...}}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// --graphon argument: a `.graphon` path, `builtin:<kind>[:p1,...]` where the
// scale n comes last for scaled families, or `builtin:graph:<spec>`.
WeightedGraph resolve_graphon(const std::string& text);

}  // namespace rhokit
