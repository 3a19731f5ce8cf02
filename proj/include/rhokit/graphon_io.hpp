#pragma once

#include <string>
#include <string_view>

#include "rhokit/graph.hpp"

namespace rhokit {

// `.graphon` text: the block count, then one line of masses, then one row of
// weights per block. '#' starts a comment. Masses summing to 1 within 1e-9
// are renormalised on read.
std::string format_graphon(const WeightedGraph& w);
WeightedGraph parse_graphon(std::string_view text);

WeightedGraph load_graphon(const std::string& path);
// Throws IoError when the file cannot be written.
void save_graphon(const WeightedGraph& w, const std::string& path);

}  // namespace rhokit
