#pragma once

#include <optional>
#include <string>

#include "spectough/graph.hpp"
#include "spectough/rational.hpp"

namespace spectough {

struct ToughnessResult {
    Rational tau;
    VertexSet witness;
    int components = 0;  // c(G - witness)

    /// {"tau":"p/q","witness":[...],"components":k}
    std::string to_json() const;
};

struct ToughnessOptions {
    /// Enumeration guard; computations refuse graphs larger than this.
    /// Subset enumeration itself supports at most 62 vertices.
    int limit = 24;
    /// Skip cardinalities that provably cannot improve the current best
    /// ratio (k/(n-k) >= best). Disabling scans every subset.
    bool prune = true;
};

/// Exact toughness min |S|/c(G-S) over all cut sets, by subset enumeration
/// in increasing cardinality and then ascending bit-mask order. The witness
/// is the deterministic first minimizer in that order. All ratio comparisons
/// are exact rationals. Throws ToughnessUndefinedError on complete graphs,
/// NotConnectedError on disconnected ones, SizeLimitError past the guard.
ToughnessResult toughness_exact(const Graph& g, const ToughnessOptions& opts = {});

struct TToughAnswer {
    bool tough = false;
    std::optional<VertexSet> witness;  // a violating cut set when !tough
};

/// Decides |S| >= t * c(G-S) for every cut set S (exact rational test),
/// short-circuiting on the first violation in enumeration order. Complete
/// graphs are vacuously t-tough for every t.
TToughAnswer is_t_tough(const Graph& g, const Rational& t, const ToughnessOptions& opts = {});

}  // namespace spectough
