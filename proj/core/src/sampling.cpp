#include "spectough/sampling.hpp"

#include <stdexcept>

namespace spectough {

Graph erdos_renyi(SplitMix64& rng, int n, double edge_probability) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.next_double() < edge_probability) b.add_edge(i, j);
        }
    }
    return b.finish();
}

std::vector<Graph> sample_connected(const RandomConnectedModel& model) {
    if (model.n < 1) throw std::invalid_argument("sample order must be positive");
    if (model.count < 0) throw std::invalid_argument("sample count cannot be negative");
    static constexpr double kProbabilities[4] = {0.2, 0.35, 0.5, 0.7};

    SplitMix64 rng(model.seed);
    std::vector<Graph> out;
    out.reserve(static_cast<size_t>(model.count));
    const long max_attempts = 200000L * (model.count + 1);
    long attempts = 0;
    while (static_cast<int>(out.size()) < model.count) {
        if (++attempts > max_attempts) {
            throw std::runtime_error("rejection sampling stalled; constraints too tight");
        }
        double p = kProbabilities[rng.next() % 4];
        Graph g = erdos_renyi(rng, model.n, p);
        if (min_degree(g) < model.min_delta) continue;
        if (!is_connected(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace spectough
