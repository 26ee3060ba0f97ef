#pragma once

#include <vector>

#include "spectough/graph.hpp"

namespace spectough {

/// Symmetric matrix of pairwise shortest-path hop counts of a connected
/// graph: zero diagonal, positive off-diagonal entries.
class DistanceMatrix {
public:
    /// All-pairs BFS. Throws NotConnectedError naming an unreachable pair.
    static DistanceMatrix from_graph(const Graph& g);
    /// Validates symmetry, zero diagonal, and positive off-diagonal entries.
    static DistanceMatrix from_entries(int n, std::vector<int> entries);

    int order() const { return n_; }
    int at(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
    long long row_sum(int i) const;
    const std::vector<int>& entries() const { return entries_; }

private:
    DistanceMatrix(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {}
    int n_ = 0;
    std::vector<int> entries_;  // row-major
};

/// Shorthand for DistanceMatrix::from_graph.
DistanceMatrix distance_matrix(const Graph& g);

struct WienerIndices {
    long long w;   // sum of pairwise distances
    long long w2;  // sum of squared pairwise distances
};

WienerIndices wiener_indices(const Graph& g);

struct DistanceBounds {
    double lower;  // 2W/n
    double upper;  // sqrt(2(n-1)W2/n)
};

/// Two-sided bracket for the distance spectral radius; requires n >= 2.
/// The upper bound is attained exactly on complete graphs.
DistanceBounds distance_bounds(const Graph& g);

}  // namespace spectough
