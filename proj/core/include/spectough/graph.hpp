#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace spectough {

/// Subset of {0..n-1} backed by packed 64-bit words. Constant-time
/// membership and popcount-based cardinality.
class VertexSet {
public:
    explicit VertexSet(int universe);
    static VertexSet of(int universe, std::initializer_list<int> members);
    static VertexSet full(int universe);
    /// Bit i of `mask` marks vertex i; universe must be <= 64.
    static VertexSet from_mask(int universe, std::uint64_t mask);

    int universe() const { return n_; }
    int count() const;
    bool empty() const { return count() == 0; }
    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    /// Members in ascending order.
    std::vector<int> to_vector() const;
    std::uint64_t to_mask() const;  // universe must be <= 64
    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
    void check_vertex(int v) const;
};

/// Simple undirected graph on dense labels 0..n-1, immutable after
/// construction. Adjacency is kept both as sorted neighbour lists and as
/// packed bit rows; the bit rows drive the connectivity tests inside
/// cut-set enumeration.
class Graph {
public:
    /// K_n. Throws std::invalid_argument for n < 1.
    static Graph complete(int n);
    /// Builds from an explicit edge list. Throws std::invalid_argument on
    /// out-of-range labels, self-loops, or duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    long long edge_count() const { return edges_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    /// Packed adjacency row of v: bit j set iff (v, j) is an edge.
    std::span<const std::uint64_t> row(int v) const;
    int words_per_row() const { return words_; }
    /// Single-word adjacency rows; only valid when order() <= 64.
    std::vector<std::uint64_t> rows64() const;

    /// All edges (u < v) in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

private:
    Graph() = default;
    friend class GraphBuilder;

    int n_ = 0;
    int words_ = 0;
    long long edges_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;  // n_ * words_, row-major
};

/// Mutable construction helper; finish() freezes into a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(int u, int v);  // ignores duplicates, rejects loops
    bool has_edge(int u, int v) const;
    Graph finish();

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

/// G1 + G2: vertices of g2 relabelled upward by g1.order(); no cross edges.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// G1 v G2: disjoint union plus all edges between the two parts; g1 keeps
/// its labels and comes first.
Graph join(const Graph& g1, const Graph& g2);

int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_complete(const Graph& g);
bool is_connected(const Graph& g);

/// Copy of g without edge (u,v); throws std::invalid_argument if absent.
Graph remove_edge(const Graph& g, int u, int v);
/// Copy of g with edge (u,v) added; throws std::invalid_argument if present.
Graph add_edge(const Graph& g, int u, int v);

struct ComponentSplit {
    int count = 0;
    std::vector<VertexSet> parts;  // ordered by smallest member
};

/// Connected components of the induced subgraph on V \ s, by breadth-first
/// traversal. s may be empty; s = V throws std::invalid_argument.
ComponentSplit components_after_removal(const Graph& g, const VertexSet& s);

}  // namespace spectough
