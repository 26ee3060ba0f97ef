#include "spectough/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "spectough/errors.hpp"

namespace spectough {

namespace {

// -------------------------------------------------------------------------
// graph6

constexpr long long kMaxShortN = 62;
constexpr long long kMaxMediumN = 258047;        // 2^18 - 1
constexpr long long kMaxLongN = 68719476735LL;   // 2^36 - 1

void append_groups(std::string& out, unsigned long long value, int groups) {
    for (int i = groups - 1; i >= 0; --i) {
        out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
    }
}

std::string encode_graph6(const Graph& g) {
    long long n = g.order();
    std::string out;
    if (n <= kMaxShortN) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= kMaxMediumN) {
        out.push_back('~');
        append_groups(out, static_cast<unsigned long long>(n), 3);
    } else if (n <= kMaxLongN) {
        out.append("~~");
        append_groups(out, static_cast<unsigned long long>(n), 6);
    } else {
        throw std::invalid_argument("graph too large for graph6");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) {
        acc <<= (6 - nbits);
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

int g6_value(unsigned char ch, size_t pos) {
    if (ch < 63 || ch > 126) {
        throw ParseError("invalid graph6 byte at position " + std::to_string(pos), 1);
    }
    return ch - 63;
}

Graph decode_graph6(const std::string& raw) {
    std::string text = raw;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    if (text.starts_with(">>graph6<<")) text = text.substr(10);
    if (text.empty()) throw ParseError("empty graph6 string", 1);

    size_t pos = 0;
    long long n;
    if (text[0] != '~') {
        n = g6_value(text[0], 0);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw ParseError("truncated graph6 length prefix", 1);
        n = 0;
        for (size_t k = 1; k <= 3; ++k) n = (n << 6) | g6_value(text[k], k);
        pos = 4;
    } else {
        if (text.size() < 8) throw ParseError("truncated graph6 length prefix", 1);
        n = 0;
        for (size_t k = 2; k <= 7; ++k) n = (n << 6) | g6_value(text[k], k);
        pos = 8;
    }
    if (n < 1) throw ParseError("graph6 order must be at least 1", 1);
    if (n > (1 << 20)) throw ParseError("graph6 order too large for this tool", 1);

    long long pairs = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((pairs + 5) / 6);
    if (text.size() - pos != need) {
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) +
                             " bytes, expected " + std::to_string(need),
                         1);
    }
    GraphBuilder b(static_cast<int>(n));
    long long bit = 0, i = 0, j = 1;
    for (size_t k = pos; k < text.size(); ++k) {
        int v = g6_value(text[k], k);
        for (int t = 5; t >= 0 && bit < pairs; --t, ++bit) {
            if ((v >> t) & 1) b.add_edge(static_cast<int>(i), static_cast<int>(j));
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return b.finish();
}

// -------------------------------------------------------------------------
// edge list

struct LineScanner {
    std::istringstream in;
    long line_no = 0;
    explicit LineScanner(const std::string& text) : in(text) {}
    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return true;
        }
        return false;
    }
};

std::vector<long long> parse_ints(const std::string& line, size_t want, long line_no) {
    std::istringstream ss(line);
    std::vector<long long> out;
    long long v;
    while (ss >> v) out.push_back(v);
    std::string junk;
    if (ss.fail() && !ss.eof()) throw ParseError("expected integers, got '" + line + "'", line_no);
    if (out.size() != want) {
        throw ParseError("expected " + std::to_string(want) + " integers, got " +
                             std::to_string(out.size()),
                         line_no);
    }
    return out;
}

Graph decode_edge_list(const std::string& text) {
    LineScanner sc(text);
    std::string line;
    if (!sc.next(line)) throw ParseError("missing 'n m' header", 1);
    auto header = parse_ints(line, 2, sc.line_no);
    long long n = header[0], m = header[1];
    if (n < 1) throw ParseError("vertex count must be at least 1", sc.line_no);
    if (m < 0) throw ParseError("edge count cannot be negative", sc.line_no);
    GraphBuilder b(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        if (!sc.next(line)) {
            throw ParseError("expected " + std::to_string(m) + " edges, file ended after " +
                                 std::to_string(e),
                             sc.line_no + 1);
        }
        auto uv = parse_ints(line, 2, sc.line_no);
        long long u = uv[0], v = uv[1];
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError("vertex id out of range 0.." + std::to_string(n - 1), sc.line_no);
        }
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), sc.line_no);
        if (b.has_edge(static_cast<int>(u), static_cast<int>(v))) {
            throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v),
                             sc.line_no);
        }
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    while (sc.next(line)) {
        if (!std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
            throw ParseError("unexpected content after the last edge", sc.line_no);
        }
    }
    return b.finish();
}

std::string encode_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6:
            return decode_graph6(text);
        case GraphFormat::EdgeList:
            return decode_edge_list(text);
    }
    throw std::invalid_argument("unknown graph format");
}

std::string write_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6:
            return encode_graph6(g);
        case GraphFormat::EdgeList:
            return encode_edge_list(g);
    }
    throw std::invalid_argument("unknown graph format");
}

}  // namespace spectough
