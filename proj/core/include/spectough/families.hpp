#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "spectough/graph.hpp"
#include "spectough/quotient.hpp"
#include "spectough/rational.hpp"

namespace spectough {

/// Parameters of the split family K_s v (K_{n1} + ... + K_{nc}):
/// a clique of size s joined to a disjoint union of cliques.
struct SplitFamilyParams {
    int s = 1;
    std::vector<int> parts;  // nonincreasing, each >= 1

    int order() const;
    void validate() const;  // throws std::invalid_argument
};

/// K_delta v (K_{n-2delta} + delta K_1); the tight family for the 1-tough
/// spectral condition at minimum degree delta.
struct OneTough {
    int n;
    int delta;
};

/// K_{2t-1} v (K_{n-2t} + K_1); tight for integer toughness targets t.
struct TIntTough {
    int n;
    int t;
};

/// K_1 v (K_{n-1-q} + q K_1) with q = 1/t; tight for fractional targets.
struct TFracTough {
    int n;
    int q;
};

using FamilyKind = std::variant<OneTough, TIntTough, TFracTough, SplitFamilyParams>;

/// Joins K_s to the disjoint union of complete parts. Labels: join clique
/// first (0..s-1), then the parts in the given order.
Graph build_split(const SplitFamilyParams& params);

/// The named family as a graph. Parameter ranges: OneTough needs
/// n >= 2delta+1, delta >= 2; TIntTough n >= 2t+1, t >= 1; TFracTough
/// n >= q+2, q >= 1.
Graph build_extremal(const FamilyKind& kind);

/// Structural recognition (not general isomorphism): the vertices of degree
/// n-1 must be exactly the join clique and the rest must split into complete
/// components of the expected sizes. False on any mismatch.
bool recognize_extremal(const Graph& g, const FamilyKind& kind);

/// The block partition matching each family's quotient display, expressed in
/// build_extremal's labels. Extremal kinds use (isolated parts, large
/// clique, join clique); Split uses (join, part1, ..., partc).
std::vector<VertexSet> canonical_blocks(const FamilyKind& kind);

/// All nonincreasing lists (n1..nc) with each part >= p and sum = total, in
/// reverse-lexicographic order, optionally restricted to n1 >= 2p. A
/// restartable deterministic stream; infeasible parameters yield an empty
/// one.
class CompositionStream {
public:
    CompositionStream(long long total, int c, int p, bool require_first_ge_2p = false);
    std::optional<std::vector<int>> next();
    std::vector<std::vector<int>> drain();

private:
    std::vector<std::vector<int>> items_;
    size_t pos_ = 0;
};

inline CompositionStream enumerate_compositions(long long total, int c, int p,
                                                bool require_first_ge_2p = false) {
    return CompositionStream(total, c, p, require_first_ge_2p);
}

// --------------------------------------------------------------------------
// Closed-form quotient matrices for the families' distance matrices, block
// order (isolated parts, large clique, join clique). Entries are exact.

/// K_d v (K_{n-2d} + d K_1): block sizes (d, n-2d, d).
QuotientMatrix rdelta_quotient(int n, int delta);
/// Same shape with s in place of delta: block sizes (s, n-2s, s).
QuotientMatrix rs_quotient(int n, int s);
/// K_s v (K_{n-s-(d-s+1)s} + s K_{d-s+1}): the s small cliques form one
/// block of size s(d-s+1).
QuotientMatrix rsdelta_quotient(int n, int s, int delta);
/// K_s v (K_{n-s-s/t} + (s/t) K_1); s/t must be a positive integer, so t is
/// either 1/q with integer q or an integer divisor of s.
QuotientMatrix rts_quotient(int n, const Rational& t, int s);

/// Closed-form characteristic polynomials of the quotients above, as monic
/// cubic coefficients (1, c2, c1, c0). These are independent algebraic
/// expressions, compared coefficientwise against charpoly3 by the checkers.
std::array<Rational, 4> rdelta_charpoly(int n, int delta);
std::array<Rational, 4> rsdelta_charpoly(int n, int s, int delta);
std::array<Rational, 4> rts_charpoly(int n, const Rational& t, int s);

// --------------------------------------------------------------------------
// Hypothesis predicates of the spectral toughness conditions, in exact
// integer arithmetic.

/// n >= max(8 delta, delta^2/2 + 2 delta + 2) and delta >= 2.
bool t1_order_ok(int n, int delta);
/// n >= 4t^2 + 10t and t >= 1.
bool t2i_order_ok(int n, int t);
/// n >= 2t + 9/(2t) + 9/2 with t = 1/q, i.e. 2qn >= 9q^2 + 9q + 4; q >= 1.
bool t2ii_order_ok(int n, int q);

int t1_min_order(int delta);
int t2i_min_order(int t);
int t2ii_min_order(int q);

}  // namespace spectough
