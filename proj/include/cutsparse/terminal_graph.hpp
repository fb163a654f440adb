#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cutsparse {

// Thrown for every domain error in the library: malformed input, violated
// preconditions, exceeded enumeration guards. The message is human-readable
// and, for parse errors, carries the offending line number.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Orientation { undirected, directed };

struct VertexInfo {
    int weight = 1;
    bool is_terminal = false;

    bool operator==(const VertexInfo&) const = default;
};

// An edge is a pair of vertex ids. Undirected edges are stored once in
// canonical form (lexicographically smaller id first); directed edges keep
// their (source, target) order.
using Edge = std::pair<std::string, std::string>;

// Vertex-weighted (di)graph with a designated terminal set.
//
// Vertices are identified by nonempty tokens of letters, digits and
// underscores. Iteration over vertices and edges is always in ascending
// lexicographic order regardless of insertion order. Self-loops and
// duplicate edges are rejected at insertion time.
//
// Instances are built once (add_vertex/add_edge) and treated as immutable
// afterwards; const instances are safe to share across threads.
class TerminalGraph {
public:
    explicit TerminalGraph(Orientation orientation = Orientation::undirected)
        : orientation_(orientation) {}

    Orientation orientation() const { return orientation_; }
    bool directed() const { return orientation_ == Orientation::directed; }

    void add_vertex(const std::string& id, int weight = 1, bool is_terminal = false);
    void add_edge(const std::string& a, const std::string& b);

    bool has_vertex(const std::string& id) const { return vertices_.count(id) > 0; }
    bool has_edge(const std::string& a, const std::string& b) const;

    // Throws Error when the vertex does not exist.
    const VertexInfo& vertex(const std::string& id) const;

    const std::map<std::string, VertexInfo>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::vector<std::string> vertex_ids() const;
    std::vector<std::string> terminal_ids() const;
    std::size_t terminal_count() const;

    long long total_weight() const;
    bool unit_weights() const;

    // True when every edge has at least one terminal endpoint.
    bool quasi_bipartite() const;

    // Canonical storage form of an edge between a and b.
    Edge canonical_edge(const std::string& a, const std::string& b) const;

    bool operator==(const TerminalGraph&) const = default;

private:
    Orientation orientation_;
    std::map<std::string, VertexInfo> vertices_;
    std::set<Edge> edges_;
};

// True for nonempty tokens of [A-Za-z0-9_].
bool valid_vertex_id(const std::string& id);

}  // namespace cutsparse
