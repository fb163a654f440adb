#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cutsparse/terminal_graph.hpp"

namespace cutsparse {

// A vertex-cut query: find the cheapest vertex set C whose removal leaves no
// path from sources\C to sinks\C after the vertices in deleted are removed.
// sources and sinks may overlap (forcing the overlap into C); deleted must be
// disjoint from both.
struct CutQuery {
    std::set<std::string> sources;
    std::set<std::string> sinks;
    std::set<std::string> deleted;
};

struct CutResult {
    long long value = 0;
    std::optional<std::vector<std::string>> witness;  // sorted ids
};

// The 2^|T| bipartition mincut values of a graph. Entry m holds
// mincut(A_m, T\A_m) where bit i of m selects terminal_order[i] into A_m.
struct MincutVector {
    std::vector<std::string> terminal_order;  // sorted terminal ids
    std::vector<long long> entries;           // size 1 << terminal_order.size()

    bool operator==(const MincutVector&) const = default;
};

// Exact minimum vertex cut via blocking-flow max-flow on the split network:
// every surviving vertex v becomes an internal arc v_in -> v_out with
// capacity w(v); graph arcs get capacity W+1 (W = total vertex weight) so
// only internal arcs can be saturated in a minimum cut. The witness is the
// source-side residual reachability cut and is deterministic.
CutResult mincut(const TerminalGraph& g, const CutQuery& q);

// Independent ground-truth oracle: enumerates candidate cuts C over V\deleted
// in increasing weight and tests disconnection by graph search. Requires
// |V \ deleted| <= 20. Shares no code with the flow solver.
CutResult mincut_bruteforce(const TerminalGraph& g, const CutQuery& q);

// Complete list of minimum-weight (sources, sinks)-vertex-cuts, each as a
// sorted id vector, in lexicographic order. Requires |V \ deleted| <= 20.
std::vector<std::vector<std::string>> enumerate_min_cuts(const TerminalGraph& g,
                                                         const CutQuery& q);

// All 2^|T| bipartition mincuts of g. Requires |T| <= 16.
MincutVector mincut_vector(const TerminalGraph& g);

// Index of a terminal subset within a MincutVector's entries.
std::size_t bipartition_index(const MincutVector& v, const std::set<std::string>& subset);

}  // namespace cutsparse
