#pragma once

#include <cstdint>
#include <vector>

#include "spectough/graph.hpp"

namespace spectough {

/// splitmix64: state advances by the golden-gamma constant and the output is
/// a two-round xor-multiply mix. Chosen because the exact algorithm is short
/// enough to restate in any language, which keeps seeded runs reproducible
/// across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// G(n, p): each pair (i,j), i < j in lexicographic order, consumes one
/// draw. Exactly n(n-1)/2 draws per call.
Graph erdos_renyi(SplitMix64& rng, int n, double edge_probability);

struct RandomConnectedModel {
    int n = 10;
    int count = 1;
    std::uint64_t seed = 0;
    int min_delta = 1;
};

/// Rejection sampler: per graph, one draw picks the edge probability from
/// {0.2, 0.35, 0.5, 0.7}, then an Erdos-Renyi sample is kept iff it is
/// connected with minimum degree >= min_delta. Deterministic given the seed.
std::vector<Graph> sample_connected(const RandomConnectedModel& model);

}  // namespace spectough
