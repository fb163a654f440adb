#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "cutsparse/terminal_graph.hpp"

namespace cutsparse::detail {

// Flat integer-indexed view of a TerminalGraph for algorithm inner loops.
// Index order equals ascending lexicographic id order, so index comparisons
// reproduce the deterministic id tie-breaking used throughout.
struct IndexedGraph {
    explicit IndexedGraph(const TerminalGraph& g) : directed(g.directed()) {
        ids.reserve(g.vertex_count());
        for (const auto& [id, info] : g.vertices()) {
            index.emplace(id, static_cast<int>(ids.size()));
            ids.push_back(id);
            weight.push_back(info.weight);
            terminal.push_back(info.is_terminal ? 1 : 0);
        }
        const int n = static_cast<int>(ids.size());
        out.assign(n, {});
        in.assign(n, {});
        weak.assign(n, {});
        for (const auto& [us, vs] : g.edges()) {
            int u = index.at(us);
            int v = index.at(vs);
            out[u].push_back(v);
            in[v].push_back(u);
            weak[u].push_back(v);
            weak[v].push_back(u);
            if (!directed) {
                out[v].push_back(u);
                in[u].push_back(v);
            }
        }
        for (auto& a : out) std::sort(a.begin(), a.end());
        for (auto& a : in) std::sort(a.begin(), a.end());
        for (auto& a : weak) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
    }

    int size() const { return static_cast<int>(ids.size()); }

    int at(const std::string& id) const {
        auto it = index.find(id);
        if (it == index.end()) throw Error("unknown vertex '" + id + "'");
        return it->second;
    }

    bool directed;
    std::vector<std::string> ids;
    std::unordered_map<std::string, int> index;
    std::vector<int> weight;
    std::vector<char> terminal;
    std::vector<std::vector<int>> out;   // directed successors; all neighbors if undirected
    std::vector<std::vector<int>> in;    // directed predecessors; all neighbors if undirected
    std::vector<std::vector<int>> weak;  // neighbors ignoring direction, deduplicated
};

}  // namespace cutsparse::detail
