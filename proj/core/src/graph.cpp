#include "spectough/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace spectough {

namespace {
int words_for(int n) { return (n + 63) / 64; }
}  // namespace

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(int universe) : n_(universe), words_(words_for(universe), 0) {
    if (universe < 0) throw std::invalid_argument("vertex set universe must be nonnegative");
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ull;
    if (universe % 64 != 0 && !s.words_.empty()) {
        s.words_.back() &= (1ull << (universe % 64)) - 1;
    }
    return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("from_mask needs universe <= 64");
    VertexSet s(universe);
    if (universe < 64 && (mask >> universe) != 0) {
        throw std::invalid_argument("mask has bits outside the universe");
    }
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
}

void VertexSet::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside universe of size " +
                                    std::to_string(n_));
    }
}

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::contains(int v) const {
    check_vertex(v);
    return (words_[v >> 6] >> (v & 63)) & 1;
}

void VertexSet::insert(int v) {
    check_vertex(v);
    words_[v >> 6] |= 1ull << (v & 63);
}

void VertexSet::erase(int v) {
    check_vertex(v);
    words_[v >> 6] &= ~(1ull << (v & 63));
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (int w = 0; w < static_cast<int>(words_.size()); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::uint64_t VertexSet::to_mask() const {
    if (n_ > 64) throw std::invalid_argument("to_mask needs universe <= 64");
    return words_.empty() ? 0 : words_[0];
}

// ---------------------------------------------------------------------------
// GraphBuilder

GraphBuilder::GraphBuilder(int n) : n_(n), words_(words_for(n)), bits_(size_t(n) * words_, 0) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
}

bool GraphBuilder::has_edge(int u, int v) const {
    return (bits_[size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    bits_[size_t(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
    bits_[size_t(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
}

Graph GraphBuilder::finish() {
    Graph g;
    g.n_ = n_;
    g.words_ = words_;
    g.bits_ = std::move(bits_);
    g.adj_.resize(n_);
    long long twice = 0;
    for (int v = 0; v < n_; ++v) {
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = g.bits_[size_t(v) * words_ + w];
            while (bits) {
                g.adj_[v].push_back(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        twice += static_cast<long long>(g.adj_[v].size());
    }
    g.edges_ = twice / 2;
    return g;
}

// ---------------------------------------------------------------------------
// Graph

Graph Graph::complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    }
    return b.finish();
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) {
        if (b.has_edge(u, v)) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        }
        b.add_edge(u, v);
    }
    return b.finish();
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw std::invalid_argument("vertex out of range");
    }
    return (bits_[size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
}

std::span<const std::uint64_t> Graph::row(int v) const {
    return {bits_.data() + size_t(v) * words_, size_t(words_)};
}

std::vector<std::uint64_t> Graph::rows64() const {
    if (n_ > 64) throw std::invalid_argument("rows64 needs order <= 64");
    std::vector<std::uint64_t> rows(n_);
    for (int v = 0; v < n_; ++v) rows[v] = bits_[size_t(v) * words_];
    return rows;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edges_));
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[u]) {
            if (v > u) out.emplace_back(u, v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Free operations

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    GraphBuilder b(g1.order() + g2.order());
    for (auto [u, v] : g1.edges()) b.add_edge(u, v);
    int off = g1.order();
    for (auto [u, v] : g2.edges()) b.add_edge(u + off, v + off);
    return b.finish();
}

Graph join(const Graph& g1, const Graph& g2) {
    GraphBuilder b(g1.order() + g2.order());
    for (auto [u, v] : g1.edges()) b.add_edge(u, v);
    int off = g1.order();
    for (auto [u, v] : g2.edges()) b.add_edge(u + off, v + off);
    for (int u = 0; u < g1.order(); ++u) {
        for (int v = 0; v < g2.order(); ++v) b.add_edge(u, off + v);
    }
    return b.finish();
}

int min_degree(const Graph& g) {
    int d = g.order();
    for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

bool is_complete(const Graph& g) {
    long long n = g.order();
    return g.edge_count() == n * (n - 1) / 2;
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw std::invalid_argument("edge to remove is absent");
    GraphBuilder b(g.order());
    for (auto [a, c] : g.edges()) {
        if ((a == u && c == v) || (a == v && c == u)) continue;
        b.add_edge(a, c);
    }
    return b.finish();
}

Graph add_edge(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (g.adjacent(u, v)) throw std::invalid_argument("edge to add is already present");
    GraphBuilder b(g.order());
    for (auto [a, c] : g.edges()) b.add_edge(a, c);
    b.add_edge(u, v);
    return b.finish();
}

ComponentSplit components_after_removal(const Graph& g, const VertexSet& s) {
    int n = g.order();
    if (s.universe() != n) throw std::invalid_argument("vertex set universe mismatch");
    if (s.count() == n) throw std::invalid_argument("cannot remove every vertex");

    int words = g.words_per_row();
    std::vector<std::uint64_t> remaining(words);
    {
        VertexSet all = VertexSet::full(n);
        auto sw = s.words();
        for (int w = 0; w < words; ++w) remaining[w] = all.words()[w] & ~sw[w];
    }

    ComponentSplit out;
    std::vector<std::uint64_t> seen(words, 0), frontier(words), next(words);
    for (int w0 = 0; w0 < words; ++w0) {
        std::uint64_t todo = remaining[w0] & ~seen[w0];
        while (todo) {
            int v = w0 * 64 + std::countr_zero(todo);
            // breadth-first growth of the component containing v
            std::fill(frontier.begin(), frontier.end(), 0);
            frontier[v >> 6] = 1ull << (v & 63);
            VertexSet comp(n);
            std::vector<std::uint64_t> compw(words, 0);
            compw[v >> 6] = frontier[v >> 6];
            bool grew = true;
            while (grew) {
                std::fill(next.begin(), next.end(), 0);
                for (int w = 0; w < words; ++w) {
                    std::uint64_t f = frontier[w];
                    while (f) {
                        int u = w * 64 + std::countr_zero(f);
                        f &= f - 1;
                        auto rowu = g.row(u);
                        for (int k = 0; k < words; ++k) next[k] |= rowu[k];
                    }
                }
                grew = false;
                for (int w = 0; w < words; ++w) {
                    next[w] &= remaining[w] & ~compw[w];
                    if (next[w]) grew = true;
                    compw[w] |= next[w];
                }
                frontier = next;
            }
            for (int w = 0; w < words; ++w) seen[w] |= compw[w];
            for (int w = 0; w < words; ++w) {
                std::uint64_t bits = compw[w];
                while (bits) {
                    comp.insert(w * 64 + std::countr_zero(bits));
                    bits &= bits - 1;
                }
            }
            out.parts.push_back(std::move(comp));
            todo = remaining[w0] & ~seen[w0];
        }
    }
    out.count = static_cast<int>(out.parts.size());
    return out;
}

bool is_connected(const Graph& g) {
    return components_after_removal(g, VertexSet(g.order())).count == 1;
}

}  // namespace spectough
