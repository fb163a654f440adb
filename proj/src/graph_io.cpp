#include "cutsparse/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace cutsparse {
namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw Error("line " + std::to_string(line_no) + ": " + msg);
}

// Parses "key=value" attributes on node lines.
void apply_node_attribute(const std::string& tok, int line_no, int& weight, bool& terminal) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) fail(line_no, "malformed node attribute '" + tok + "'");
    std::string key = tok.substr(0, eq);
    std::string value = tok.substr(eq + 1);
    if (key == "terminal") {
        if (value == "0") terminal = false;
        else if (value == "1") terminal = true;
        else fail(line_no, "terminal must be 0 or 1, got '" + value + "'");
    } else if (key == "weight") {
        std::size_t used = 0;
        long long w = 0;
        try {
            w = std::stoll(value, &used);
        } catch (const std::exception&) {
            fail(line_no, "malformed weight '" + value + "'");
        }
        if (used != value.size()) fail(line_no, "malformed weight '" + value + "'");
        if (w < 1) fail(line_no, "weight must be >= 1, got " + value);
        if (w > 1000000) fail(line_no, "weight too large: " + value);
        weight = static_cast<int>(w);
    } else {
        fail(line_no, "unknown node attribute '" + key + "'");
    }
}

}  // namespace

TerminalGraph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    TerminalGraph g;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> tokens = split_tokens(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (!have_header) {
            if (tokens.size() != 2 || tokens[0] != "graph" ||
                (tokens[1] != "directed" && tokens[1] != "undirected")) {
                fail(line_no, "expected 'graph directed' or 'graph undirected'");
            }
            g = TerminalGraph(tokens[1] == "directed" ? Orientation::directed
                                                      : Orientation::undirected);
            have_header = true;
        } else if (tokens[0] == "node") {
            if (tokens.size() < 2) fail(line_no, "node line needs an id");
            const std::string& id = tokens[1];
            if (!valid_vertex_id(id)) fail(line_no, "invalid vertex id '" + id + "'");
            int weight = 1;
            bool terminal = false;
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                apply_node_attribute(tokens[i], line_no, weight, terminal);
            }
            try {
                g.add_vertex(id, weight, terminal);
            } catch (const Error& e) {
                fail(line_no, e.what());
            }
        } else if (tokens[0] == "edge") {
            if (tokens.size() != 3) fail(line_no, "edge line needs exactly two vertex ids");
            try {
                g.add_edge(tokens[1], tokens[2]);
            } catch (const Error& e) {
                fail(line_no, e.what());
            }
        } else {
            fail(line_no, "malformed line, expected node/edge/comment");
        }
    }
    if (!have_header) throw Error("missing 'graph directed|undirected' header");
    return g;
}

TerminalGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_graph(const TerminalGraph& g) {
    std::ostringstream out;
    out << "graph " << (g.directed() ? "directed" : "undirected") << "\n";
    for (const auto& [id, info] : g.vertices()) {
        out << "node " << id;
        if (info.is_terminal) out << " terminal=1";
        if (info.weight != 1) out << " weight=" << info.weight;
        out << "\n";
    }
    for (const auto& [u, v] : g.edges()) {
        out << "edge " << u << " " << v << "\n";
    }
    return out.str();
}

TerminalGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    return parse_graph(in);
}

void save_graph_file(const TerminalGraph& g, const std::string& path,
                     const std::string& trailer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << serialize_graph(g) << trailer;
    if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace cutsparse
