#include "cutsparse/terminal_graph.hpp"

#include <algorithm>
#include <cctype>

namespace cutsparse {

bool valid_vertex_id(const std::string& id) {
    if (id.empty()) return false;
    for (char c : id) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

void TerminalGraph::add_vertex(const std::string& id, int weight, bool is_terminal) {
    if (!valid_vertex_id(id)) throw Error("invalid vertex id '" + id + "'");
    if (weight < 1) throw Error("vertex '" + id + "': weight must be >= 1");
    if (vertices_.count(id)) throw Error("duplicate vertex id '" + id + "'");
    vertices_[id] = VertexInfo{weight, is_terminal};
}

Edge TerminalGraph::canonical_edge(const std::string& a, const std::string& b) const {
    if (!directed() && b < a) return {b, a};
    return {a, b};
}

void TerminalGraph::add_edge(const std::string& a, const std::string& b) {
    if (!vertices_.count(a)) throw Error("edge references unknown vertex '" + a + "'");
    if (!vertices_.count(b)) throw Error("edge references unknown vertex '" + b + "'");
    if (a == b) throw Error("self-loop on vertex '" + a + "'");
    Edge e = canonical_edge(a, b);
    if (edges_.count(e)) {
        throw Error("duplicate edge " + a + (directed() ? " -> " : " -- ") + b);
    }
    edges_.insert(e);
}

bool TerminalGraph::has_edge(const std::string& a, const std::string& b) const {
    return edges_.count(canonical_edge(a, b)) > 0;
}

const VertexInfo& TerminalGraph::vertex(const std::string& id) const {
    auto it = vertices_.find(id);
    if (it == vertices_.end()) throw Error("unknown vertex '" + id + "'");
    return it->second;
}

std::vector<std::string> TerminalGraph::vertex_ids() const {
    std::vector<std::string> ids;
    ids.reserve(vertices_.size());
    for (const auto& [id, info] : vertices_) ids.push_back(id);
    return ids;
}

std::vector<std::string> TerminalGraph::terminal_ids() const {
    std::vector<std::string> ids;
    for (const auto& [id, info] : vertices_) {
        if (info.is_terminal) ids.push_back(id);
    }
    return ids;
}

std::size_t TerminalGraph::terminal_count() const {
    std::size_t k = 0;
    for (const auto& [id, info] : vertices_) k += info.is_terminal ? 1 : 0;
    return k;
}

long long TerminalGraph::total_weight() const {
    long long w = 0;
    for (const auto& [id, info] : vertices_) w += info.weight;
    return w;
}

bool TerminalGraph::unit_weights() const {
    return std::all_of(vertices_.begin(), vertices_.end(),
                       [](const auto& kv) { return kv.second.weight == 1; });
}

bool TerminalGraph::quasi_bipartite() const {
    for (const auto& [u, v] : edges_) {
        if (!vertices_.at(u).is_terminal && !vertices_.at(v).is_terminal) return false;
    }
    return true;
}

}  // namespace cutsparse
