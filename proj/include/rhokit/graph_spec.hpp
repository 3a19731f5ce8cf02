#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rhokit/graph.hpp"

namespace rhokit {

// Parsed form of the graph mini-language:
//
//   spec  := INT 'x' spec          disjoint copies
//          | 'P' INT               path with INT edges
//          | 'C' INT               cycle of length INT
//          | 'K' INT               complete graph
//          | 'K[' list ']'         complete multipartite
//          | 'S' INT               star K_{1,INT}
//          | 'Khub[' list ']'      clique with pendant groups (K')
//          | 'Gtail[' INT ',' INT ']'
//          | 'paw'
//          | '@' PATH              edge-list file
//   list  := INT (',' INT)*
//
// Leading and trailing whitespace is ignored; spaces are allowed after commas.
struct GraphSpec {
    enum class Kind { path, cycle, complete, multipartite, star, hub, cycle_tail, paw, copies, edge_file };

    Kind kind = Kind::paw;
    std::vector<int> params;
    std::shared_ptr<const GraphSpec> inner;  // for copies
    std::string file;                        // for edge_file

    friend bool operator==(const GraphSpec& a, const GraphSpec& b);
};

// Throws ParseError (with the offending character position) on malformed
// text and on out-of-range family parameters.
GraphSpec parse_spec(std::string_view text);

// Inverse of parse_spec: parse_spec(render(s)) == s.
std::string render(const GraphSpec& spec);

// Builds the denoted graph; edge files are read from disk.
Graph to_graph(const GraphSpec& spec);

Graph parse_graph_spec(std::string_view text);

// Edge-list file: first token is the vertex count, then whitespace separated
// 0-indexed endpoint pairs. '#' starts a comment that runs to end of line.
Graph read_edge_file(const std::string& path);
Graph parse_edge_list(std::string_view text);

}  // namespace rhokit
