#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spectough/families.hpp"
#include "spectough/graph.hpp"
#include "spectough/rational.hpp"
#include "spectough/toughness.hpp"

namespace spectough {

/// Strict inequalities must clear this absolute slack.
inline constexpr double kEpsStrict = 1e-9;
/// Relative tolerance for comparing spectral radii of two graphs; verdicts
/// always carry the signed margin so near-ties stay auditable.
inline constexpr double kEpsCmp = 1e-8;
/// Non-strict bounds may undershoot by at most this much numerically, and
/// upper-bound equality is declared within it.
inline constexpr double kEqTol = 1e-9;
/// Allowed relative gap between a full spectral radius and the one read off
/// an equitable quotient.
inline constexpr double kQuotientRelTol = 1e-8;
/// A characteristic polynomial evaluated at its own largest root must be
/// this close to zero.
inline constexpr double kCharpolyEvalTol = 1e-6;

struct CaseRecord {
    std::string name;
    bool ok = true;
    double margin = 0.0;
    std::vector<std::pair<std::string, double>> values;
};

struct CheckReport {
    std::string name;
    bool passed = false;
    long cases_run = 0;
    double worst_margin = 0.0;  // min margin over cases; 0 when none ran
    std::vector<CaseRecord> details;
    std::vector<std::pair<std::string, long>> counts;  // verdict tallies for sweeps

    std::string to_json() const;
};

/// Deleting any edge that keeps the graph connected strictly raises the
/// distance spectral radius. One case per deletable edge; vacuous pass when
/// every edge is a bridge. Needs a connected graph on >= 3 vertices.
CheckReport check_lemma1(const Graph& g);

/// The largest eigenvalue of the family's canonical equitable quotient
/// agrees with the full distance spectral radius within kQuotientRelTol.
CheckReport check_lemma2_consistency(const FamilyKind& kind);

/// 2W/n <= lambda1 <= sqrt(2(n-1)W2/n), with upper equality (within kEqTol)
/// exactly on complete graphs.
CheckReport check_bounds(const Graph& g);

/// Over all admissible compositions of n-s into c parts >= p (first part
/// >= 2p when p >= 2), the split graph's spectral radius is uniquely
/// minimized at (n-s-p(c-1), p, ..., p); uniqueness gap > kEpsStrict.
/// Infeasible filters yield an empty-case pass with a warning record.
CheckReport check_composition_min(int n, int s, int c, int p);

/// The Perron components of K_s v (K_{n-s-p(c-1)} + (c-1)K_p) satisfy
/// x3/x2 = 1 + (n-s-cp)/(lambda1+p+1) within kEpsCmp relative, where x2
/// lives on the large clique and x3 on the small parts. Needs c >= 2.
CheckReport check_perron_ratio(int n, int s, int c, int p);

struct RdeltaParams {
    int n, delta;
};
struct RsDeltaParams {
    int n, s, delta;
};
struct RtsParams {
    int n;
    Rational t;
    int s;
};
using CharpolyParams = std::variant<RdeltaParams, RsDeltaParams, RtsParams>;

/// det(xI - R) of the closed-form quotient, expanded in exact rationals,
/// must equal the closed-form polynomial coefficientwise; the polynomial
/// must also vanish (within kCharpolyEvalTol) at the numeric largest root.
CheckReport check_charpoly(const CharpolyParams& params);

// ---------------------------------------------------------------------------
// Theorem classification

enum class Verdict {
    HypothesisNotMet,
    SpectralConditionFails,
    ConsistentTough,
    ExtremalMatch,
    Counterexample,
};

const char* verdict_name(Verdict v);

/// T1(delta): spectral condition for 1-toughness at minimum degree delta.
/// T2i(t): integer target t. T2ii(q): fractional target t = 1/q.
struct TheoremSelector {
    enum class Which { T1, T2i, T2ii };
    Which which = Which::T1;
    int param = 2;

    Rational target() const;  // 1, t, or 1/q
};

struct TheoremClassification {
    Verdict verdict = Verdict::HypothesisNotMet;
    double lambda1 = 0.0;
    double threshold = 0.0;
    double margin = 0.0;  // threshold - lambda1
    std::optional<ToughnessResult> tough;

    std::string to_json() const;
};

/// Evaluates the hypotheses (connectivity is a precondition; order bound,
/// and for T1 minimum degree), compares lambda1 against the threshold (the
/// matching extremal family's spectral radius, from its closed-form
/// quotient) at kEpsCmp relative, then classifies. A Counterexample verdict
/// additionally requires lambda1 strictly inside the threshold, failing
/// toughness, and failing the structural recognizer. Toughness enumeration
/// guards propagate when the verdict needs tau.
TheoremClassification check_theorem(const Graph& g, const TheoremSelector& sel, int limit = 24);

// ---------------------------------------------------------------------------
// Sweeps

struct RandomPopulation {
    int n = 16;
    int count = 100;
    std::uint64_t seed = 0;
    int min_delta = 1;
};

struct ExhaustivePopulation {
    int max_n = 5;
    bool isomorph_reject = false;  // exact but exponential; off by default
};

using Population = std::variant<RandomPopulation, ExhaustivePopulation>;

struct SweepRow {
    int n = 0;
    long index = 0;
    double lambda1 = 0.0;
    double threshold = 0.0;
    double margin = 0.0;
    std::optional<Rational> tau;
    Verdict verdict = Verdict::HypothesisNotMet;
};

struct SweepResult {
    CheckReport report;
    std::vector<SweepRow> rows;  // substantive cases (hypotheses met), input order

    /// Header "n,seed_index,lambda1,threshold,margin,tau,verdict" plus one
    /// row per substantive case.
    std::string to_csv() const;
};

/// Runs check_theorem over the population. passed iff zero Counterexample
/// verdicts; counts tally every verdict including hypothesis filtering.
/// Evaluation may run on several threads (SPECTOUGH_THREADS caps it) but
/// results merge in input order, so reports are byte-stable.
SweepResult sweep(const Population& pop, const TheoremSelector& sel, int limit = 24,
                  int threads = 0);

/// Canonical form helper used by isomorph rejection: the minimum
/// upper-triangle bit string over all vertex relabelings. Exponential in n;
/// meant for n <= 8.
std::uint64_t canonical_form(const Graph& g);

}  // namespace spectough
