#pragma once

#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "cis/graph.hpp"

namespace cis {

/// graph6 encoding, bit-exact per the published format: order as chr(n+63)
/// for n <= 62, otherwise '~' followed by three 6-bit groups (big-endian);
/// then the upper triangle in column-major order, x(0,1) x(0,2) x(1,2) ...,
/// packed into 6-bit groups (first bit highest), each group offset by 63.
inline std::string emit_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + (n >> 12 & 63)));
        out.push_back(static_cast<char>(63 + (n >> 6 & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    unsigned group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        std::uint64_t column = g.adj_word(j);
        for (int i = 0; i < j; ++i) {
            group = group << 1 | static_cast<unsigned>(column >> i & 1);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

namespace detail {

inline unsigned graph6_sextet(char c) {
    unsigned char byte = static_cast<unsigned char>(c);
    if (byte < 63 || byte > 126) throw parse_error("graph6: byte outside printable range");
    return byte - 63u;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("graph6: empty input");
    std::size_t pos = 0;
    long n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw parse_error("graph6: order out of range");
        if (text.size() < 4) throw parse_error("graph6: truncated order field");
        n = static_cast<long>(detail::graph6_sextet(text[1])) << 12 |
            static_cast<long>(detail::graph6_sextet(text[2])) << 6 |
            static_cast<long>(detail::graph6_sextet(text[3]));
        pos = 4;
    } else {
        n = static_cast<long>(detail::graph6_sextet(text[0]));
        pos = 1;
    }
    if (n < 1 || n > kMaxOrder) throw parse_error("graph6: order out of range");

    long bits = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos < body) throw parse_error("graph6: truncated bit body");
    if (text.size() - pos > body) throw parse_error("graph6: trailing characters");

    Graph g(static_cast<int>(n));
    long bit = 0;
    int i = 0, j = 1;
    for (std::size_t c = 0; c < body; ++c) {
        unsigned group = detail::graph6_sextet(text[pos + c]);
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = group >> b & 1;
            if (bit >= bits) {
                if (set) throw parse_error("graph6: nonzero padding");
                continue;
            }
            if (set) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

/// Plain edge-list text: "n; u-v, u-v, ..." (the edge part may be empty).
inline Graph parse_edge_list(std::string_view text) {
    auto skip_ws = [&](std::size_t& i) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto read_int = [&](std::size_t& i) -> int {
        skip_ws(i);
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) throw parse_error("edge list: expected an integer");
        if (i - start > 4) throw parse_error("edge list: integer too large");
        int value = 0;
        for (std::size_t k = start; k < i; ++k) value = value * 10 + (text[k] - '0');
        return value;
    };

    std::size_t i = 0;
    int n = read_int(i);
    skip_ws(i);
    if (i >= text.size() || text[i] != ';') throw parse_error("edge list: expected ';' after order");
    ++i;
    if (n < 1 || n > kMaxOrder) throw parse_error("edge list: order out of range");
    Graph g(n);
    skip_ws(i);
    while (i < text.size()) {
        int u = read_int(i);
        skip_ws(i);
        if (i >= text.size() || text[i] != '-') throw parse_error("edge list: expected 'u-v'");
        ++i;
        int v = read_int(i);
        if (u >= n || v >= n) throw parse_error("edge list: vertex id out of range");
        if (u == v) throw parse_error("edge list: loops are not allowed");
        g.add_edge(u, v);
        skip_ws(i);
        if (i < text.size()) {
            if (text[i] != ',') throw parse_error("edge list: expected ',' between edges");
            ++i;
            skip_ws(i);
            if (i == text.size()) throw parse_error("edge list: dangling ','");
        }
    }
    return g;
}

/// One-line graph input: ';' never occurs in graph6, so its presence selects
/// the edge-list reader.
inline Graph parse_graph_line(std::string_view line) {
    if (line.find(';') != std::string_view::npos) return parse_edge_list(line);
    return parse_graph6(line);
}

/// Reads a catalog file, one graph per non-empty line (graph6 or edge list).
inline std::vector<Graph> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        graphs.push_back(parse_graph_line(line));
    }
    return graphs;
}

}  // namespace cis
