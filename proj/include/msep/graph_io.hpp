#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "graph.hpp"

namespace msep {

struct GraphFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Graph text format:
///   line 1:            n <count>
///   subsequent lines:  <u> <v>            edge with 0 <= u < v < n
///                      label <v> <text>   after all edges
///                      # ...              comment (skipped)
/// Duplicate edge lines are an error. UTF-8, LF line endings.
inline Graph parse_graph(std::istream& in) {
    std::string line;
    auto fail = [](int lineno, const std::string& why) -> void {
        throw GraphFormatError("line " + std::to_string(lineno) + ": " + why);
    };

    if (!std::getline(in, line)) throw GraphFormatError("empty input, expected 'n <count>' header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream head(line);
    std::string tag;
    long long n = -1;
    if (!(head >> tag >> n) || tag != "n" || n < 0 || (head >> tag))
        fail(1, "expected 'n <count>' header, got '" + line + "'");

    Graph g(static_cast<int>(n));
    bool labels_started = false;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') continue;

        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "label") {
            long long v = -1;
            if (!(ls >> v) || v < 0 || v >= n) fail(lineno, "bad label vertex in '" + line + "'");
            std::string text;
            std::getline(ls, text);
            std::size_t start = text.find_first_not_of(' ');
            text = start == std::string::npos ? std::string() : text.substr(start);
            if (text.empty()) fail(lineno, "label line with empty text");
            g.set_label(static_cast<int>(v), text);
            labels_started = true;
            continue;
        }

        long long u = -1, v = -1;
        std::istringstream es(line);
        std::string extra;
        if (!(es >> u >> v) || (es >> extra)) fail(lineno, "expected '<u> <v>' edge, got '" + line + "'");
        if (labels_started) fail(lineno, "edge line after label lines");
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(lineno, "edge endpoint out of range in '" + line + "'");
        if (u >= v) fail(lineno, "edge must satisfy u < v, got '" + line + "'");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            fail(lineno, "duplicate edge '" + line + "'");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    if (g.has_labels())
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!g.label(v).empty()) out << "label " << v << " " << g.label(v) << "\n";
    return out.str();
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphFormatError("cannot open '" + path + "'");
    return parse_graph(in);
}

inline void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphFormatError("cannot open '" + path + "' for writing");
    out << serialize_graph(g);
}

}  // namespace msep
