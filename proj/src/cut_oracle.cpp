#include "cutsparse/cut_oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "detail/indexed_graph.hpp"

namespace cutsparse {
namespace {

using detail::IndexedGraph;

// Dinic blocking-flow max-flow. Arcs are added in a fixed order, and BFS/DFS
// scan adjacency in insertion order, so flows and residual reachability are
// deterministic.
class FlowNetwork {
public:
    explicit FlowNetwork(int n) : adj_(n), level_(n), iter_(n) {}

    void add_arc(int from, int to, long long cap) {
        adj_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap});
        adj_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            long long f;
            while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) flow += f;
        }
        return flow;
    }

    // Residual reachability from s after max_flow.
    std::vector<char> reachable(int s) const {
        std::vector<char> seen(adj_.size(), 0);
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : adj_[v]) {
                const Arc& a = arcs_[id];
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    q.push(a.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        long long cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : adj_[v]) {
                const Arc& a = arcs_[id];
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[v] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    long long dfs(int v, int t, long long limit) {
        if (v == t) return limit;
        for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
            int id = adj_[v][i];
            Arc& a = arcs_[id];
            if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
            long long got = dfs(a.to, t, std::min(limit, a.cap));
            if (got > 0) {
                a.cap -= got;
                arcs_[id ^ 1].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

void validate_query(const TerminalGraph& g, const CutQuery& q) {
    for (const auto* side : {&q.sources, &q.sinks, &q.deleted}) {
        for (const auto& id : *side) {
            if (!g.has_vertex(id)) throw Error("query vertex '" + id + "' not in graph");
        }
    }
    for (const auto& id : q.deleted) {
        if (q.sources.count(id) || q.sinks.count(id)) {
            throw Error("deleted vertex '" + id + "' intersects sources or sinks");
        }
    }
}

// Shared with the brute-force oracle and cut enumeration: does removing
// (deleted ∪ cut) disconnect sources\cut from sinks\cut? Plain BFS, no flow
// machinery.
bool disconnects(const IndexedGraph& ix, const std::vector<char>& removed,
                 const std::vector<char>& is_source, const std::vector<char>& is_sink) {
    std::vector<char> seen(ix.size(), 0);
    std::queue<int> q;
    for (int v = 0; v < ix.size(); ++v) {
        if (is_source[v] && !removed[v]) {
            seen[v] = 1;
            q.push(v);
        }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (is_sink[v]) return false;
        for (int u : ix.out[v]) {
            if (!removed[u] && !seen[u]) {
                seen[u] = 1;
                q.push(u);
            }
        }
    }
    return true;
}

struct BruteForceFrame {
    IndexedGraph ix;
    std::vector<int> alive;  // indices of V \ deleted, ascending
    std::vector<char> base_removed;
    std::vector<char> is_source;
    std::vector<char> is_sink;
};

BruteForceFrame make_frame(const TerminalGraph& g, const CutQuery& q) {
    validate_query(g, q);
    BruteForceFrame f{IndexedGraph(g), {}, {}, {}, {}};
    int n = f.ix.size();
    f.base_removed.assign(n, 0);
    f.is_source.assign(n, 0);
    f.is_sink.assign(n, 0);
    for (const auto& id : q.deleted) f.base_removed[f.ix.at(id)] = 1;
    for (const auto& id : q.sources) f.is_source[f.ix.at(id)] = 1;
    for (const auto& id : q.sinks) f.is_sink[f.ix.at(id)] = 1;
    for (int v = 0; v < n; ++v) {
        if (!f.base_removed[v]) f.alive.push_back(v);
    }
    if (f.alive.size() > 20) {
        throw Error("exhaustive cut search limited to 20 surviving vertices, got " +
                    std::to_string(f.alive.size()));
    }
    return f;
}

}  // namespace

CutResult mincut(const TerminalGraph& g, const CutQuery& q) {
    validate_query(g, q);
    IndexedGraph ix(g);
    const int n = ix.size();
    const long long inf = g.total_weight() + 1;

    std::vector<char> deleted(n, 0);
    for (const auto& id : q.deleted) deleted[ix.at(id)] = 1;

    // Node layout: v_in = 2v, v_out = 2v + 1, source = 2n, sink = 2n + 1.
    FlowNetwork net(2 * n + 2);
    const int source = 2 * n;
    const int sink = 2 * n + 1;
    for (int v = 0; v < n; ++v) {
        if (!deleted[v]) net.add_arc(2 * v, 2 * v + 1, ix.weight[v]);
    }
    for (int u = 0; u < n; ++u) {
        if (deleted[u]) continue;
        for (int v : ix.out[u]) {
            if (!deleted[v]) net.add_arc(2 * u + 1, 2 * v, inf);
        }
    }
    for (const auto& id : q.sources) net.add_arc(source, 2 * ix.at(id), inf);
    for (const auto& id : q.sinks) net.add_arc(2 * ix.at(id) + 1, sink, inf);

    CutResult result;
    result.value = net.max_flow(source, sink);

    std::vector<char> reach = net.reachable(source);
    std::vector<std::string> witness;
    for (int v = 0; v < n; ++v) {
        if (!deleted[v] && reach[2 * v] && !reach[2 * v + 1]) witness.push_back(ix.ids[v]);
    }
    result.witness = std::move(witness);
    return result;
}

CutResult mincut_bruteforce(const TerminalGraph& g, const CutQuery& q) {
    BruteForceFrame f = make_frame(g, q);
    const int m = static_cast<int>(f.alive.size());

    long long best = std::numeric_limits<long long>::max();
    std::uint64_t best_mask = 0;
    std::vector<char> removed = f.base_removed;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        long long w = 0;
        for (int b = 0; b < m; ++b) {
            if (mask >> b & 1) w += f.ix.weight[f.alive[b]];
        }
        if (w >= best) continue;
        for (int b = 0; b < m; ++b) removed[f.alive[b]] = static_cast<char>(mask >> b & 1);
        std::vector<char> sink_alive = f.is_sink;
        for (int b = 0; b < m; ++b) {
            if (mask >> b & 1) sink_alive[f.alive[b]] = 0;
        }
        if (disconnects(f.ix, removed, f.is_source, sink_alive)) {
            best = w;
            best_mask = mask;
        }
    }

    CutResult result;
    result.value = best;
    std::vector<std::string> witness;
    for (int b = 0; b < m; ++b) {
        if (best_mask >> b & 1) witness.push_back(f.ix.ids[f.alive[b]]);
    }
    result.witness = std::move(witness);
    return result;
}

std::vector<std::vector<std::string>> enumerate_min_cuts(const TerminalGraph& g,
                                                         const CutQuery& q) {
    BruteForceFrame f = make_frame(g, q);
    const int m = static_cast<int>(f.alive.size());
    const long long best = mincut_bruteforce(g, q).value;

    std::vector<std::vector<std::string>> cuts;
    std::vector<char> removed;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        long long w = 0;
        for (int b = 0; b < m; ++b) {
            if (mask >> b & 1) w += f.ix.weight[f.alive[b]];
        }
        if (w != best) continue;
        removed = f.base_removed;
        std::vector<char> sink_alive = f.is_sink;
        for (int b = 0; b < m; ++b) {
            if (mask >> b & 1) {
                removed[f.alive[b]] = 1;
                sink_alive[f.alive[b]] = 0;
            }
        }
        if (!disconnects(f.ix, removed, f.is_source, sink_alive)) continue;
        std::vector<std::string> cut;
        for (int b = 0; b < m; ++b) {
            if (mask >> b & 1) cut.push_back(f.ix.ids[f.alive[b]]);
        }
        cuts.push_back(std::move(cut));
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

MincutVector mincut_vector(const TerminalGraph& g) {
    MincutVector result;
    result.terminal_order = g.terminal_ids();
    const std::size_t k = result.terminal_order.size();
    if (k > 16) {
        throw Error("mincut_vector limited to 16 terminals, got " + std::to_string(k));
    }
    result.entries.resize(std::size_t{1} << k);
    for (std::size_t mask = 0; mask < result.entries.size(); ++mask) {
        CutQuery q;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1) q.sources.insert(result.terminal_order[i]);
            else q.sinks.insert(result.terminal_order[i]);
        }
        result.entries[mask] = mincut(g, q).value;
    }
    return result;
}

std::size_t bipartition_index(const MincutVector& v, const std::set<std::string>& subset) {
    std::size_t mask = 0;
    for (const auto& id : subset) {
        auto it = std::lower_bound(v.terminal_order.begin(), v.terminal_order.end(), id);
        if (it == v.terminal_order.end() || *it != id) {
            throw Error("'" + id + "' is not a terminal of this mincut vector");
        }
        mask |= std::size_t{1} << (it - v.terminal_order.begin());
    }
    return mask;
}

}  // namespace cutsparse
