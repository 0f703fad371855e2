#include "thetafree/graph6.hpp"

#include <istream>

namespace thetafree {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kMarker = ">>graph6<<";

}  // namespace

Graph from_graph6(std::string_view text) {
    if (text.starts_with(kMarker)) text.remove_prefix(kMarker.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("graph6: empty input");
    for (char c : text) {
        if (c < kBias || c > 126) throw Graph6Error("graph6: byte outside the printable range 63..126");
    }

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = text[0] - kBias;
        pos = 1;
    } else if (text.size() >= 2 && text[1] == '~') {
        throw Graph6Error("graph6: vertex count exceeds the 64-vertex budget");
    } else {
        if (text.size() < 4) throw Graph6Error("graph6: truncated size header");
        n = 0;
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | (text[i] - kBias);
        if (n < 63) throw Graph6Error("graph6: long size header used for n < 63");
        pos = 4;
    }
    if (n > kMaxVertices) {
        throw Graph6Error("graph6: vertex count " + std::to_string(n) + " exceeds the 64-vertex budget");
    }

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    const std::size_t have = text.size() - pos;
    if (have < nbytes) throw Graph6Error("graph6: truncated edge payload");
    if (have > nbytes) throw Graph6Error("graph6: trailing bytes after edge payload");

    std::vector<std::pair<int, int>> edges;
    std::size_t k = 0;
    int i = 0;
    int j = 1;
    for (std::size_t b = 0; b < nbytes; ++b) {
        const int chunk = text[pos + b] - kBias;
        for (int s = 5; s >= 0; --s, ++k) {
            const bool set = (chunk >> s) & 1;
            if (k >= nbits) {
                if (set) throw Graph6Error("graph6: non-zero padding bits");
                continue;
            }
            if (set) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        const VertexSet column = g.neighbors(j);
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | static_cast<int>(contains(column, i));
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

}  // namespace thetafree
