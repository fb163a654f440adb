#pragma once

#include <iosfwd>
#include <string>

#include "cutsparse/terminal_graph.hpp"

namespace cutsparse {

// Line-based text format, UTF-8:
//
//   graph undirected            (or "graph directed"; must come first)
//   node <id> [terminal=0|1] [weight=<int>=1>]
//   edge <src> <dst>
//
// Lines starting with '#' are comments; blank lines are ignored. Nodes must
// be declared before edges that reference them. Errors carry line numbers.
TerminalGraph parse_graph(const std::string& text);
TerminalGraph parse_graph(std::istream& in);

// Canonical form: header, nodes in ascending id order, edges in ascending
// (src, dst) order. Default attribute values are omitted, so
// parse(serialize(g)) == g and serialize is idempotent over parse.
std::string serialize_graph(const TerminalGraph& g);

TerminalGraph load_graph_file(const std::string& path);
void save_graph_file(const TerminalGraph& g, const std::string& path,
                     const std::string& trailer = "");

}  // namespace cutsparse
