#include "spectough/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spectough {

int SplitFamilyParams::order() const {
    return s + std::accumulate(parts.begin(), parts.end(), 0);
}

void SplitFamilyParams::validate() const {
    if (s < 1) throw std::invalid_argument("join clique size must be positive");
    if (parts.empty()) throw std::invalid_argument("split family needs at least one part");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("part sizes must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("part sizes must be nonincreasing");
        }
    }
}

Graph build_split(const SplitFamilyParams& params) {
    params.validate();
    int n = params.order();
    GraphBuilder b(n);
    for (int u = 0; u < params.s; ++u) {
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    }
    int off = params.s;
    for (int size : params.parts) {
        for (int u = off; u < off + size; ++u) {
            for (int v = u + 1; v < off + size; ++v) b.add_edge(u, v);
        }
        off += size;
    }
    return b.finish();
}

namespace {

SplitFamilyParams split_params_for(const FamilyKind& kind) {
    return std::visit(
        [](const auto& k) -> SplitFamilyParams {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, OneTough>) {
                if (k.delta < 2) throw std::invalid_argument("OneTough needs delta >= 2");
                if (k.n < 2 * k.delta + 1) throw std::invalid_argument("OneTough needs n >= 2*delta+1");
                std::vector<int> parts{k.n - 2 * k.delta};
                parts.insert(parts.end(), static_cast<size_t>(k.delta), 1);
                return {k.delta, std::move(parts)};
            } else if constexpr (std::is_same_v<T, TIntTough>) {
                if (k.t < 1) throw std::invalid_argument("TIntTough needs t >= 1");
                if (k.n < 2 * k.t + 1) throw std::invalid_argument("TIntTough needs n >= 2t+1");
                return {2 * k.t - 1, {k.n - 2 * k.t, 1}};
            } else if constexpr (std::is_same_v<T, TFracTough>) {
                if (k.q < 1) throw std::invalid_argument("TFracTough needs q >= 1");
                if (k.n < k.q + 2) throw std::invalid_argument("TFracTough needs n >= q+2");
                std::vector<int> parts{k.n - 1 - k.q};
                parts.insert(parts.end(), static_cast<size_t>(k.q), 1);
                return {1, std::move(parts)};
            } else {
                k.validate();
                return k;
            }
        },
        kind);
}

bool parts_nonincreasing_sorted_equal(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    return a == b;
}

}  // namespace

Graph build_extremal(const FamilyKind& kind) { return build_split(split_params_for(kind)); }

bool recognize_extremal(const Graph& g, const FamilyKind& kind) {
    SplitFamilyParams params;
    try {
        params = split_params_for(kind);
    } catch (const std::invalid_argument&) {
        return false;  // unconstructible parameters match nothing
    }
    int n = g.order();
    if (n != params.order()) return false;

    if (params.parts.size() == 1) return is_complete(g);  // K_s v K_{n1} = K_n

    VertexSet joiners(n);
    int count = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) {
            joiners.insert(v);
            ++count;
        }
    }
    if (count != params.s) return false;

    auto split = components_after_removal(g, joiners);
    if (split.count != static_cast<int>(params.parts.size())) return false;
    std::vector<int> sizes;
    sizes.reserve(split.parts.size());
    for (const auto& part : split.parts) {
        auto members = part.to_vector();
        // each component must induce a clique
        for (size_t i = 0; i < members.size(); ++i) {
            for (size_t j = i + 1; j < members.size(); ++j) {
                if (!g.adjacent(members[i], members[j])) return false;
            }
        }
        sizes.push_back(static_cast<int>(members.size()));
    }
    return parts_nonincreasing_sorted_equal(std::move(sizes), params.parts);
}

std::vector<VertexSet> canonical_blocks(const FamilyKind& kind) {
    SplitFamilyParams params = split_params_for(kind);
    int n = params.order();
    auto range = [n](int lo, int hi) {  // [lo, hi)
        VertexSet s(n);
        for (int v = lo; v < hi; ++v) s.insert(v);
        return s;
    };

    if (std::holds_alternative<SplitFamilyParams>(kind)) {
        // (join, part1, ..., partc) in label order
        std::vector<VertexSet> blocks{range(0, params.s)};
        int off = params.s;
        for (int size : params.parts) {
            blocks.push_back(range(off, off + size));
            off += size;
        }
        return blocks;
    }
    // extremal kinds: (isolated parts, large clique, join clique)
    int s = params.s;
    int big = params.parts.front();
    return {range(s + big, n), range(s, s + big), range(0, s)};
}

// ---------------------------------------------------------------------------
// Compositions

CompositionStream::CompositionStream(long long total, int c, int p, bool require_first_ge_2p) {
    if (c < 1) throw std::invalid_argument("composition count must be positive");
    if (p < 1) throw std::invalid_argument("part lower bound must be positive");
    if (total < static_cast<long long>(c) * p) return;  // infeasible: empty stream

    std::vector<int> current(static_cast<size_t>(c));
    auto emit = [&](auto&& self, long long rem, int idx, int max_part) -> void {
        int remaining = c - idx;
        if (remaining == 1) {
            if (rem >= p && rem <= max_part) {
                current[idx] = static_cast<int>(rem);
                items_.push_back(current);
            }
            return;
        }
        long long hi = std::min<long long>(max_part, rem - static_cast<long long>(p) * (remaining - 1));
        for (long long v = hi; v >= p; --v) {
            if (v * remaining < rem) break;  // later parts cannot exceed v
            current[idx] = static_cast<int>(v);
            self(self, rem - v, idx + 1, static_cast<int>(v));
        }
    };
    emit(emit, total, 0, static_cast<int>(std::min<long long>(total, INT32_MAX)));

    if (require_first_ge_2p) {
        std::erase_if(items_, [&](const std::vector<int>& parts) { return parts[0] < 2 * p; });
    }
}

std::optional<std::vector<int>> CompositionStream::next() {
    if (pos_ >= items_.size()) return std::nullopt;
    return items_[pos_++];
}

std::vector<std::vector<int>> CompositionStream::drain() {
    std::vector<std::vector<int>> rest(items_.begin() + static_cast<long>(pos_), items_.end());
    pos_ = items_.size();
    return rest;
}

// ---------------------------------------------------------------------------
// Closed-form quotients

namespace {

QuotientMatrix make_quotient(std::vector<long long> entries, std::vector<int> block_sizes) {
    QuotientMatrix q;
    q.m = 3;
    q.block_sizes = std::move(block_sizes);
    q.entries.reserve(entries.size());
    for (long long v : entries) {
        if (v < 0) throw std::invalid_argument("closed-form quotient entry would be negative");
        q.entries.emplace_back(v);
    }
    q.equitable = true;
    return q;
}

}  // namespace

QuotientMatrix rdelta_quotient(int n, int delta) {
    if (delta < 1) throw std::invalid_argument("delta must be positive");
    long long b = static_cast<long long>(n) - 2 * delta;
    if (b < 1) throw std::invalid_argument("rdelta quotient needs n >= 2*delta+1");
    long long d = delta;
    return make_quotient({2 * (d - 1), 2 * b, d,
                          2 * d,       b - 1, d,
                          d,           b,     d - 1},
                         {delta, static_cast<int>(b), delta});
}

QuotientMatrix rs_quotient(int n, int s) { return rdelta_quotient(n, s); }

QuotientMatrix rsdelta_quotient(int n, int s, int delta) {
    if (s < 1) throw std::invalid_argument("s must be positive");
    if (delta < s) throw std::invalid_argument("rsdelta quotient needs delta >= s");
    long long part = static_cast<long long>(delta) - s + 1;  // size of each small clique
    long long merged = static_cast<long long>(s) * part;
    long long b = static_cast<long long>(n) - s - merged;
    if (b < 1) throw std::invalid_argument("rsdelta quotient needs n > s + s*(delta-s+1)");
    long long S = s;
    return make_quotient({(delta - S) + 2 * (S - 1) * part, 2 * b, S,
                          2 * S * part,                     b - 1, S,
                          S * part,                         b,     S - 1},
                         {static_cast<int>(merged), static_cast<int>(b), s});
}

QuotientMatrix rts_quotient(int n, const Rational& t, int s) {
    if (s < 1) throw std::invalid_argument("s must be positive");
    if (!(t > Rational(0))) throw std::invalid_argument("t must be positive");
    Rational m_exact = Rational(s) / t;
    if (m_exact.den() != 1 || m_exact.num() < 1) {
        throw std::invalid_argument("rts quotient needs s/t to be a positive integer");
    }
    long long m = m_exact.num();
    long long b = static_cast<long long>(n) - s - m;
    if (b < 1) throw std::invalid_argument("rts quotient needs n > s + s/t");
    long long S = s;
    return make_quotient({2 * (m - 1), 2 * b, S,
                          2 * m,       b - 1, S,
                          m,           b,     S - 1},
                         {static_cast<int>(m), static_cast<int>(b), s});
}

std::array<Rational, 4> rdelta_charpoly(int n, int delta) {
    // the cubic is conventionally displayed with a symbol `a` in place of
    // delta; coefficientwise matching against the determinant expansion of
    // the quotient pins a = delta, so that is what this computes
    long long N = n, a = delta;
    long long c2 = -(N + a - 4);
    long long c1 = -(2 * a * N + 3 * N - 5 * a * a + a - 5);
    long long c0 = a * a * N - 2 * a * N - 2 * N - 2 * a * a * a + 5 * a * a + 2;
    return {Rational(1), Rational(c2), Rational(c1), Rational(c0)};
}

std::array<Rational, 4> rsdelta_charpoly(int n, int s, int delta) {
    long long N = n, S = s, d = delta;
    long long S2 = S * S, S3 = S2 * S, S4 = S3 * S, S5 = S4 * S;
    long long c2 = S2 - (d + 2) * S + d - N + 4;
    long long c1 = 2 * S4 - (4 * d + 6) * S3 + (2 * d * d + 5 * d + 2 * N + 5) * S2 +
                   (d * d - 2 * N * d - N - 3) * S - N * d + 2 * d - 3 * N + 5;
    long long c0 = -S5 + (2 * d + 5) * S4 - (d * d + 7 * d + N + 8) * S3 +
                   (2 * d * d + N * d + 5 * d + 3 * N + 4) * S2 +
                   (d * d - 2 * N * d + d - N - 1) * S - N * d + d - 2 * N + 2;
    return {Rational(1), Rational(c2), Rational(c1), Rational(c0)};
}

std::array<Rational, 4> rts_charpoly(int n, const Rational& t, int s) {
    Rational N(n), S(s), T = t;
    Rational T2 = T * T, S2 = S * S, S3 = S2 * S;
    Rational c2 = -(T * N + S - Rational(4) * T) / T;
    Rational c1 = -(Rational(3) * T2 * N + Rational(2) * S * T * N - Rational(5) * T2 -
                    Rational(3) * S2 * T + S * T - Rational(2) * S2) /
                  T2;
    Rational c0 = (Rational(-2) * T2 * N + S2 * T * N - Rational(2) * S * T * N + Rational(2) * T2 -
                   S3 * T + Rational(3) * S2 * T - S3 + Rational(2) * S2) /
                  T2;
    return {Rational(1), c2, c1, c0};
}

// ---------------------------------------------------------------------------
// Hypothesis predicates

bool t1_order_ok(int n, int delta) {
    if (delta < 2) return false;
    long long d = delta;
    return n >= 8 * d && 2LL * n >= d * d + 4 * d + 4;
}

bool t2i_order_ok(int n, int t) {
    if (t < 1) return false;
    long long T = t;
    return n >= 4 * T * T + 10 * T;
}

bool t2ii_order_ok(int n, int q) {
    if (q < 1) return false;
    long long Q = q;
    return 2 * Q * n >= 9 * Q * Q + 9 * Q + 4;
}

int t1_min_order(int delta) {
    long long d = delta;
    long long quadratic = (d * d + 4 * d + 4 + 1) / 2;  // ceil((d^2+4d+4)/2)
    return static_cast<int>(std::max(8 * d, quadratic));
}

int t2i_min_order(int t) {
    long long T = t;
    return static_cast<int>(4 * T * T + 10 * T);
}

int t2ii_min_order(int q) {
    long long Q = q;
    return static_cast<int>((9 * Q * Q + 9 * Q + 4 + 2 * Q - 1) / (2 * Q));  // ceil
}

}  // namespace spectough
