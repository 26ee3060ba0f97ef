#include "spectough/distance.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

#include "spectough/errors.hpp"

namespace spectough {

DistanceMatrix DistanceMatrix::from_graph(const Graph& g) {
    int n = g.order();
    std::vector<int> d(static_cast<size_t>(n) * n, -1);
    std::vector<int> queue(n);
    for (int src = 0; src < n; ++src) {
        int* row = d.data() + static_cast<size_t>(src) * n;
        int head = 0, tail = 0;
        row[src] = 0;
        queue[tail++] = src;
        while (head < tail) {
            int u = queue[head++];
            for (int v : g.neighbors(u)) {
                if (row[v] < 0) {
                    row[v] = row[u] + 1;
                    queue[tail++] = v;
                }
            }
        }
        if (tail < n) {
            for (int v = 0; v < n; ++v) {
                if (row[v] < 0) throw NotConnectedError(src, v);
            }
        }
    }
    return DistanceMatrix(n, std::move(d));
}

DistanceMatrix DistanceMatrix::from_entries(int n, std::vector<int> entries) {
    if (n < 1) throw std::invalid_argument("order must be at least 1");
    if (entries.size() != static_cast<size_t>(n) * n) {
        throw std::invalid_argument("entry count does not match order");
    }
    for (int i = 0; i < n; ++i) {
        if (entries[static_cast<size_t>(i) * n + i] != 0) {
            throw std::invalid_argument("diagonal must be zero");
        }
        for (int j = i + 1; j < n; ++j) {
            int a = entries[static_cast<size_t>(i) * n + j];
            int b = entries[static_cast<size_t>(j) * n + i];
            if (a != b) throw std::invalid_argument("matrix is not symmetric");
            if (a < 1) throw std::invalid_argument("off-diagonal entries must be positive");
        }
    }
    return DistanceMatrix(n, std::move(entries));
}

long long DistanceMatrix::row_sum(int i) const {
    long long s = 0;
    for (int j = 0; j < n_; ++j) s += at(i, j);
    return s;
}

DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix::from_graph(g); }

WienerIndices wiener_indices(const Graph& g) {
    DistanceMatrix d = distance_matrix(g);
    long long w = 0, w2 = 0;
    int n = d.order();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            long long v = d.at(i, j);
            w += v;
            w2 += v * v;
        }
    }
    return {w, w2};
}

DistanceBounds distance_bounds(const Graph& g) {
    int n = g.order();
    if (n < 2) throw std::invalid_argument("distance bounds need n >= 2");
    auto [w, w2] = wiener_indices(g);
    double lower = 2.0 * static_cast<double>(w) / n;
    double upper = std::sqrt(2.0 * (n - 1) * static_cast<double>(w2) / n);
    return {lower, upper};
}

}  // namespace spectough
