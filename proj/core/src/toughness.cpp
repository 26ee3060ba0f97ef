#include "spectough/toughness.hpp"

#include <bit>
#include <stdexcept>

#include <json.hpp>

#include "spectough/errors.hpp"

namespace spectough {

std::string ToughnessResult::to_json() const {
    nlohmann::ordered_json j;
    j["tau"] = tau.str();
    j["witness"] = witness.to_vector();
    j["components"] = components;
    return j.dump();
}

namespace {

constexpr int kEnumerationCap = 62;  // single-word masks with safe 1<<n

int count_components64(std::uint64_t rem, const std::vector<std::uint64_t>& adj) {
    int count = 0;
    std::uint64_t todo = rem;
    while (todo) {
        std::uint64_t seed = todo & (~todo + 1);
        std::uint64_t seen = seed;
        std::uint64_t frontier = seed;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                next |= adj[std::countr_zero(f)];
                f &= f - 1;
            }
            frontier = next & rem & ~seen;
            seen |= frontier;
        }
        todo &= ~seen;
        ++count;
    }
    return count;
}

std::uint64_t next_subset_same_popcount(std::uint64_t s) {
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    return (((r ^ s) >> 2) / c) | r;
}

void check_preconditions(const Graph& g, const ToughnessOptions& opts) {
    int n = g.order();
    if (!is_connected(g)) {
        // name an unreachable pair for the error message
        auto split = components_after_removal(g, VertexSet(n));
        int u = split.parts[0].to_vector().front();
        int v = split.parts[1].to_vector().front();
        throw NotConnectedError(u, v);
    }
    if (opts.limit > kEnumerationCap) {
        throw SizeLimitError("enumeration limit cannot exceed " +
                             std::to_string(kEnumerationCap) + " vertices");
    }
    if (n > opts.limit) {
        throw SizeLimitError("graph has " + std::to_string(n) +
                             " vertices, above the enumeration limit " +
                             std::to_string(opts.limit) +
                             "; use is_t_tough for a targeted question or raise the limit "
                             "(cost grows as 2^n)");
    }
}

}  // namespace

ToughnessResult toughness_exact(const Graph& g, const ToughnessOptions& opts) {
    if (is_complete(g)) throw ToughnessUndefinedError();
    check_preconditions(g, opts);

    int n = g.order();
    auto adj = g.rows64();
    const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);

    bool have_best = false;
    Rational best;
    std::uint64_t best_mask = 0;
    int best_components = 0;

    for (int k = 1; k <= n - 2; ++k) {
        // c(G-S) <= n-k, so no subset of size >= k can beat a ratio of k/(n-k)
        if (opts.prune && have_best && Rational(k, n - k) >= best) break;
        std::uint64_t s = (1ull << k) - 1;
        while (s <= full) {
            std::uint64_t rem = full & ~s;
            int c = count_components64(rem, adj);
            if (c >= 2) {
                Rational ratio(k, c);
                if (!have_best || ratio < best) {
                    have_best = true;
                    best = ratio;
                    best_mask = s;
                    best_components = c;
                }
            }
            if (s == full) break;
            s = next_subset_same_popcount(s);
        }
    }
    // connected non-complete graphs always have a cut set
    ToughnessResult r{best, VertexSet::from_mask(n, best_mask), best_components};
    return r;
}

TToughAnswer is_t_tough(const Graph& g, const Rational& t, const ToughnessOptions& opts) {
    if (!(t > Rational(0))) throw std::invalid_argument("toughness target must be positive");
    // no cut set exists in a complete graph; vacuously t-tough, no enumeration
    if (is_complete(g)) return {true, std::nullopt};
    check_preconditions(g, opts);

    int n = g.order();
    auto adj = g.rows64();
    const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);

    for (int k = 1; k <= n - 2; ++k) {
        // a violation |S| < t*c needs t*(n-k) > k
        if (t * Rational(n - k) <= Rational(k)) break;
        std::uint64_t s = (1ull << k) - 1;
        while (s <= full) {
            std::uint64_t rem = full & ~s;
            int c = count_components64(rem, adj);
            if (c >= 2 && Rational(k) < t * Rational(c)) {
                return {false, VertexSet::from_mask(n, s)};
            }
            if (s == full) break;
            s = next_subset_same_popcount(s);
        }
    }
    return {true, std::nullopt};
}

}  // namespace spectough
