#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "packrho/graph.hpp"

namespace packrho {

enum class GraphFormat { graph6, dimacs, edgelist };

struct GraphDocument {
    GraphFormat format = GraphFormat::graph6;
    std::string text;
    std::string name;
};

// ---- graph6 ----------------------------------------------------------
// Standard 6-bit encoding: header byte(s) for n, then the upper triangle
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian six bits per byte,
// each byte offset by 63.

inline std::string to_graph6(const Graph& g) {
    std::string out;
    auto push6 = [&](int v) { out += static_cast<char>(v + 63); };
    if (g.n <= 62) {
        push6(g.n);
    } else if (g.n <= 258047) {
        out += static_cast<char>(126);
        push6((g.n >> 12) & 63);
        push6((g.n >> 6) & 63);
        push6(g.n & 63);
    } else {
        throw BadParametersError("graph6 writer supports n <= 258047");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                push6(acc);
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) push6(acc << (6 - nbits));
    return out;
}

inline Graph parse_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    if (s.empty()) throw ParseError(1, "empty graph6 string");
    std::size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= s.size()) throw ParseError(1, "truncated graph6 string");
        int v = static_cast<unsigned char>(s[pos++]) - 63;
        if (v < 0 || v > 63) throw ParseError(1, "byte out of graph6 range");
        return v;
    };
    long long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        ++pos;
        if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126)
            throw ParseError(1, "graph6 n > 258047 not supported");
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | take();
    } else {
        n = take();
    }
    std::vector<Edge> edges;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = take();
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) edges.emplace_back(i, j);
            --nbits;
        }
    if (pos != s.size()) throw ParseError(1, "trailing bytes after graph6 data");
    return Graph::from_edges(static_cast<int>(n), edges);
}

// ---- DIMACS .col ------------------------------------------------------

inline std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

inline Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long long nn, mm;
            if (!(ls >> kind >> nn >> mm) || (kind != "edge" && kind != "edges" && kind != "col"))
                throw ParseError(lineno, "expected 'p edge <n> <m>'");
            n = static_cast<int>(nn);
        } else if (tag == "e") {
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'e <u> <v>'");
            if (n < 0) throw ParseError(lineno, "edge before problem line");
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(lineno, "edge endpoint out of range");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing problem line");
    return Graph::from_edges(n, edges);
}

// ---- plain edge list ---------------------------------------------------
// '#' starts a comment; a line with one integer declares the vertex count,
// a line with two integers is a 0-based edge. The writer leads with the
// vertex count so isolated vertices survive the round trip.

inline std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.n << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    long long declared = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        long long a, b;
        if (!(ls >> a)) continue;
        if (ls >> b) {
            if (a < 0 || b < 0) throw ParseError(lineno, "negative vertex id");
            edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
            declared = std::max({declared, a + 1, b + 1});
        } else {
            if (a < 0) throw ParseError(lineno, "negative vertex count");
            declared = std::max(declared, a);
        }
        long long extra;
        if (ls >> extra) throw ParseError(lineno, "too many fields");
    }
    return Graph::from_edges(static_cast<int>(declared), edges);
}

// ---- dispatch ----------------------------------------------------------

inline GraphDocument write_graph(const Graph& g, GraphFormat fmt) {
    GraphDocument doc;
    doc.format = fmt;
    switch (fmt) {
        case GraphFormat::graph6: doc.text = to_graph6(g); break;
        case GraphFormat::dimacs: doc.text = to_dimacs(g); break;
        case GraphFormat::edgelist: doc.text = to_edgelist(g); break;
    }
    return doc;
}

inline Graph parse_graph(const GraphDocument& doc) {
    switch (doc.format) {
        case GraphFormat::graph6: return parse_graph6(doc.text);
        case GraphFormat::dimacs: return parse_dimacs(doc.text);
        case GraphFormat::edgelist: return parse_edgelist(doc.text);
    }
    throw BadParametersError("unknown graph format");
}

// Sniff the format from a filename extension and the content.
inline GraphFormat detect_format(const std::string& filename, const std::string& text) {
    auto ends_with = [&](const char* suf) {
        std::string s(suf);
        return filename.size() >= s.size() &&
               filename.compare(filename.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".g6") || ends_with(".graph6")) return GraphFormat::graph6;
    if (ends_with(".col") || ends_with(".dimacs")) return GraphFormat::dimacs;
    if (ends_with(".el") || ends_with(".edges") || ends_with(".edgelist"))
        return GraphFormat::edgelist;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == 'c' || c == 'p' || c == 'e') return GraphFormat::dimacs;
        if (c == '#' || std::isdigit(static_cast<unsigned char>(c)))
            return GraphFormat::edgelist;
        return GraphFormat::graph6;
    }
    return GraphFormat::edgelist;
}

// ---- coloring files ----------------------------------------------------
// One 1-based color per line in vertex-id order; '#' comments allowed.

inline std::vector<int> parse_coloring(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<int> colors;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        long long c;
        if (!(ls >> c)) continue;
        if (c < 1) throw ParseError(lineno, "colors are 1-based positive integers");
        colors.push_back(static_cast<int>(c));
        long long extra;
        if (ls >> extra) throw ParseError(lineno, "one color per line");
    }
    return colors;
}

inline std::string write_coloring(const std::vector<int>& colors) {
    std::ostringstream out;
    for (int c : colors) out << c << '\n';
    return out.str();
}

}  // namespace packrho
