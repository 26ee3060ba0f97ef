#include "spectough/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "spectough/distance.hpp"
#include "spectough/errors.hpp"
#include "spectough/graph_io.hpp"
#include "spectough/sampling.hpp"
#include "spectough/spectral.hpp"

namespace spectough {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string double_str(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

void finalize(CheckReport& r) {
    r.cases_run = static_cast<long>(r.details.size());
    r.passed = true;
    bool first = true;
    for (const auto& c : r.details) {
        if (!c.ok) r.passed = false;
        if (first || c.margin < r.worst_margin) r.worst_margin = c.margin;
        first = false;
    }
    if (first) r.worst_margin = 0.0;
}

Graph connected_or_throw(const Graph& g) {
    auto split = components_after_removal(g, VertexSet(g.order()));
    if (split.count != 1) {
        throw NotConnectedError(split.parts[0].to_vector().front(),
                                split.parts[1].to_vector().front());
    }
    return g;
}

std::string family_label(const FamilyKind& kind) {
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, OneTough>) {
                return "one-tough(n=" + std::to_string(k.n) + ",delta=" + std::to_string(k.delta) +
                       ")";
            } else if constexpr (std::is_same_v<T, TIntTough>) {
                return "t-int(n=" + std::to_string(k.n) + ",t=" + std::to_string(k.t) + ")";
            } else if constexpr (std::is_same_v<T, TFracTough>) {
                return "t-frac(n=" + std::to_string(k.n) + ",q=" + std::to_string(k.q) + ")";
            } else {
                std::string parts;
                for (size_t i = 0; i < k.parts.size(); ++i) {
                    if (i) parts += ",";
                    parts += std::to_string(k.parts[i]);
                }
                return "split(s=" + std::to_string(k.s) + ",parts=(" + parts + "))";
            }
        },
        kind);
}

}  // namespace

std::string CheckReport::to_json() const {
    ordered_json j;
    j["name"] = name;
    j["passed"] = passed;
    j["cases_run"] = cases_run;
    j["worst_margin"] = worst_margin;
    ordered_json cnt = ordered_json::object();
    for (const auto& [k, v] : counts) cnt[k] = v;
    j["counts"] = cnt;
    ordered_json det = ordered_json::array();
    for (const auto& c : details) {
        ordered_json jc;
        jc["case"] = c.name;
        jc["ok"] = c.ok;
        jc["margin"] = c.margin;
        ordered_json vals = ordered_json::object();
        for (const auto& [k, v] : c.values) vals[k] = v;
        jc["values"] = vals;
        det.push_back(std::move(jc));
    }
    j["details"] = det;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Lemma checks

CheckReport check_lemma1(const Graph& g) {
    if (g.order() < 3) throw std::invalid_argument("edge-deletion check needs n >= 3");
    connected_or_throw(g);

    CheckReport r;
    r.name = "lemma1(" + write_graph(g, GraphFormat::Graph6) + ")";
    double base = spectral_radius(distance_matrix(g)).lambda1;
    for (auto [u, v] : g.edges()) {
        Graph h = remove_edge(g, u, v);
        if (!is_connected(h)) continue;
        double lam = spectral_radius(distance_matrix(h)).lambda1;
        CaseRecord c;
        c.name = "delete(" + std::to_string(u) + "," + std::to_string(v) + ")";
        c.margin = lam - base;
        c.ok = c.margin > kEpsStrict;
        c.values = {{"lambda1_base", base}, {"lambda1_deleted", lam}};
        r.details.push_back(std::move(c));
    }
    finalize(r);
    return r;
}

CheckReport check_lemma2_consistency(const FamilyKind& kind) {
    CheckReport r;
    r.name = "lemma2-consistency(" + family_label(kind) + ")";

    Graph g = build_extremal(kind);
    QuotientMatrix q = quotient_matrix(distance_matrix(g), canonical_blocks(kind));
    double full = spectral_radius(distance_matrix(g)).lambda1;
    double quot = q.spectral_radius();
    double relerr = std::fabs(quot - full) / full;

    CaseRecord c;
    c.name = "quotient-vs-full";
    c.margin = kQuotientRelTol - relerr;
    c.ok = q.equitable && c.margin >= 0.0;
    c.values = {{"lambda1_full", full},
                {"lambda1_quotient", quot},
                {"relative_error", relerr},
                {"equitable", q.equitable ? 1.0 : 0.0}};
    r.details.push_back(std::move(c));
    finalize(r);
    return r;
}

CheckReport check_bounds(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("bounds check needs n >= 2");
    connected_or_throw(g);

    CheckReport r;
    r.name = "bounds(" + write_graph(g, GraphFormat::Graph6) + ")";
    auto [lower, upper] = distance_bounds(g);
    double lam = spectral_radius(distance_matrix(g)).lambda1;
    bool complete = is_complete(g);
    double m_lower = lam - lower;
    double m_upper = upper - lam;
    bool equality_at_upper = m_upper <= kEqTol;

    CaseRecord c;
    c.name = complete ? "complete" : "incomplete";
    c.margin = std::min(m_lower, m_upper);
    c.ok = m_lower >= -kEqTol && m_upper >= -kEqTol && (equality_at_upper == complete);
    c.values = {{"lower", lower},
                {"lambda1", lam},
                {"upper", upper},
                {"lower_margin", m_lower},
                {"upper_margin", m_upper}};
    r.details.push_back(std::move(c));
    finalize(r);
    return r;
}

CheckReport check_composition_min(int n, int s, int c, int p) {
    if (s < 1 || c < 1 || p < 1) throw std::invalid_argument("parameters must be positive");
    long long total = static_cast<long long>(n) - s;
    if (total < static_cast<long long>(c) * p) {
        throw std::invalid_argument("need n - s >= c*p");
    }

    CheckReport r;
    r.name = "composition-min(n=" + std::to_string(n) + ",s=" + std::to_string(s) +
             ",c=" + std::to_string(c) + ",p=" + std::to_string(p) + ")";

    CompositionStream stream(total, c, p, p >= 2);
    auto compositions = stream.drain();
    if (compositions.empty()) {
        r.counts.emplace_back("no_admissible_compositions", 1);
        finalize(r);
        r.passed = true;
        return r;
    }

    // the stream is reverse-lexicographic, so the candidate minimizer leads
    std::vector<int> canonical{static_cast<int>(total - static_cast<long long>(p) * (c - 1))};
    canonical.insert(canonical.end(), static_cast<size_t>(c - 1), p);

    std::vector<double> lambdas(compositions.size());
    for (size_t i = 0; i < compositions.size(); ++i) {
        Graph g = build_split({s, compositions[i]});
        lambdas[i] = spectral_radius(distance_matrix(g)).lambda1;
    }

    bool canonical_first = compositions.front() == canonical;
    for (size_t i = 0; i < compositions.size(); ++i) {
        std::string parts;
        for (size_t k = 0; k < compositions[i].size(); ++k) {
            if (k) parts += ",";
            parts += std::to_string(compositions[i][k]);
        }
        CaseRecord rec;
        rec.name = "(" + parts + ")";
        rec.values = {{"lambda1", lambdas[i]}};
        if (i == 0) {
            rec.margin = 0.0;
            rec.ok = canonical_first;
        } else {
            rec.margin = lambdas[i] - lambdas[0];
            rec.ok = rec.margin > kEpsStrict;
        }
        r.details.push_back(std::move(rec));
    }
    finalize(r);
    return r;
}

CheckReport check_perron_ratio(int n, int s, int c, int p) {
    if (s < 1 || p < 1) throw std::invalid_argument("parameters must be positive");
    if (c < 2) throw std::invalid_argument("perron ratio needs c >= 2");
    int big = n - s - p * (c - 1);
    if (big < p) throw std::invalid_argument("need n >= s + c*p");

    CheckReport r;
    r.name = "perron-ratio(n=" + std::to_string(n) + ",s=" + std::to_string(s) +
             ",c=" + std::to_string(c) + ",p=" + std::to_string(p) + ")";

    std::vector<int> parts{big};
    parts.insert(parts.end(), static_cast<size_t>(c - 1), p);
    Graph g = build_split({s, parts});
    SpectralResult res = spectral_radius(distance_matrix(g));
    double x2 = res.perron[static_cast<size_t>(s)];            // large clique
    double x3 = res.perron[static_cast<size_t>(s) + big];      // first small part
    double measured = x3 / x2;
    double predicted = 1.0 + (n - s - static_cast<double>(c) * p) / (res.lambda1 + p + 1);
    double relerr = std::fabs(measured - predicted) / predicted;

    CaseRecord rec;
    rec.name = "ratio";
    rec.margin = kEpsCmp - relerr;
    rec.ok = rec.margin >= 0.0;
    rec.values = {{"lambda1", res.lambda1},
                  {"measured", measured},
                  {"predicted", predicted},
                  {"relative_error", relerr}};
    r.details.push_back(std::move(rec));
    finalize(r);
    return r;
}

CheckReport check_charpoly(const CharpolyParams& params) {
    QuotientMatrix q;
    std::array<Rational, 4> expected;
    std::string label;
    if (const auto* rd = std::get_if<RdeltaParams>(&params)) {
        q = rdelta_quotient(rd->n, rd->delta);
        expected = rdelta_charpoly(rd->n, rd->delta);
        label = "rdelta(n=" + std::to_string(rd->n) + ",delta=" + std::to_string(rd->delta) + ")";
    } else if (const auto* rsd = std::get_if<RsDeltaParams>(&params)) {
        q = rsdelta_quotient(rsd->n, rsd->s, rsd->delta);
        expected = rsdelta_charpoly(rsd->n, rsd->s, rsd->delta);
        label = "rsdelta(n=" + std::to_string(rsd->n) + ",s=" + std::to_string(rsd->s) +
                ",delta=" + std::to_string(rsd->delta) + ")";
    } else {
        const auto& rts = std::get<RtsParams>(params);
        q = rts_quotient(rts.n, rts.t, rts.s);
        expected = rts_charpoly(rts.n, rts.t, rts.s);
        label = "rts(n=" + std::to_string(rts.n) + ",t=" + rts.t.str() +
                ",s=" + std::to_string(rts.s) + ")";
    }

    CheckReport r;
    r.name = "charpoly(" + label + ")";
    auto got = charpoly3(q);
    bool exact = got == expected;
    double lam = q.spectral_radius();
    double at_root = eval_cubic(got, lam);

    CaseRecord rec;
    rec.name = label;
    rec.margin = kCharpolyEvalTol - std::fabs(at_root);
    rec.ok = exact && rec.margin >= 0.0;
    rec.values = {{"c2", got[1].to_double()},
                  {"c1", got[2].to_double()},
                  {"c0", got[3].to_double()},
                  {"exact_match", exact ? 1.0 : 0.0},
                  {"lambda1", lam},
                  {"poly_at_lambda1", at_root}};
    r.details.push_back(std::move(rec));
    finalize(r);
    return r;
}

// ---------------------------------------------------------------------------
// Theorem classification

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::HypothesisNotMet:
            return "hypothesis-not-met";
        case Verdict::SpectralConditionFails:
            return "spectral-condition-fails";
        case Verdict::ConsistentTough:
            return "consistent-tough";
        case Verdict::ExtremalMatch:
            return "extremal-match";
        case Verdict::Counterexample:
            return "counterexample";
    }
    return "unknown";
}

Rational TheoremSelector::target() const {
    switch (which) {
        case Which::T1:
            return Rational(1);
        case Which::T2i:
            return Rational(param);
        case Which::T2ii:
            return Rational(1, param);
    }
    throw std::logic_error("unhandled selector");
}

std::string TheoremClassification::to_json() const {
    ordered_json j;
    j["verdict"] = verdict_name(verdict);
    j["lambda1"] = lambda1;      // NaN serializes as null
    j["threshold"] = threshold;
    j["margin"] = margin;
    if (tough) {
        ordered_json jt;
        jt["tau"] = tough->tau.str();
        jt["witness"] = tough->witness.to_vector();
        jt["components"] = tough->components;
        j["tough"] = jt;
    } else {
        j["tough"] = nullptr;
    }
    return j.dump();
}

namespace {

bool theorem_hypotheses(const Graph& g, const TheoremSelector& sel) {
    int n = g.order();
    switch (sel.which) {
        case TheoremSelector::Which::T1:
            return t1_order_ok(n, sel.param) && min_degree(g) >= sel.param;
        case TheoremSelector::Which::T2i:
            return t2i_order_ok(n, sel.param);
        case TheoremSelector::Which::T2ii:
            return t2ii_order_ok(n, sel.param);
    }
    return false;
}

QuotientMatrix threshold_quotient(const TheoremSelector& sel, int n) {
    switch (sel.which) {
        case TheoremSelector::Which::T1:
            return rdelta_quotient(n, sel.param);
        case TheoremSelector::Which::T2i:
            // K_{2t-1} v (K_{n-2t} + K_1) has the singleton-part quotient
            return rts_quotient(n, Rational(2 * sel.param - 1), 2 * sel.param - 1);
        case TheoremSelector::Which::T2ii:
            return rts_quotient(n, Rational(1, sel.param), 1);
    }
    throw std::logic_error("unhandled selector");
}

FamilyKind matching_family(const TheoremSelector& sel, int n) {
    switch (sel.which) {
        case TheoremSelector::Which::T1:
            return OneTough{n, sel.param};
        case TheoremSelector::Which::T2i:
            return TIntTough{n, sel.param};
        case TheoremSelector::Which::T2ii:
            return TFracTough{n, sel.param};
    }
    throw std::logic_error("unhandled selector");
}

}  // namespace

TheoremClassification check_theorem(const Graph& g, const TheoremSelector& sel, int limit) {
    if (sel.param < 1) throw std::invalid_argument("theorem parameter must be positive");
    connected_or_throw(g);

    TheoremClassification out;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (!theorem_hypotheses(g, sel)) {
        out.verdict = Verdict::HypothesisNotMet;
        out.lambda1 = out.threshold = out.margin = nan;
        return out;
    }

    int n = g.order();
    out.lambda1 = spectral_radius(distance_matrix(g)).lambda1;
    out.threshold = threshold_quotient(sel, n).spectral_radius();
    out.margin = out.threshold - out.lambda1;

    if (out.lambda1 > out.threshold * (1.0 + kEpsCmp)) {
        out.verdict = Verdict::SpectralConditionFails;
        return out;
    }

    ToughnessOptions opts{.limit = limit};
    if (recognize_extremal(g, matching_family(sel, n))) {
        out.verdict = Verdict::ExtremalMatch;
        if (!is_complete(g) && n <= limit) out.tough = toughness_exact(g, opts);
        return out;
    }

    auto answer = is_t_tough(g, sel.target(), opts);
    if (answer.tough) {
        out.verdict = Verdict::ConsistentTough;
        if (!is_complete(g)) out.tough = toughness_exact(g, opts);
        return out;
    }

    out.tough = toughness_exact(g, opts);
    // strictly inside the threshold: a genuine violation of the implication
    if (out.lambda1 <= out.threshold * (1.0 - kEpsCmp)) {
        out.verdict = Verdict::Counterexample;
    } else {
        // within the comparison band; the spectral condition is not certified
        out.verdict = Verdict::SpectralConditionFails;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

int resolve_threads(int requested, size_t work_items) {
    int threads = requested;
    if (threads <= 0) {
        if (const char* env = std::getenv("SPECTOUGH_THREADS")) {
            threads = std::atoi(env);
        }
    }
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min<long long>(threads, 64);
    threads = static_cast<int>(std::min<size_t>(threads, std::max<size_t>(work_items, 1)));
    return threads;
}

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                cursor.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    GraphBuilder b(n);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1) b.add_edge(i, j);
        }
    }
    return b.finish();
}

std::string selector_label(const TheoremSelector& sel) {
    switch (sel.which) {
        case TheoremSelector::Which::T1:
            return "t1(delta=" + std::to_string(sel.param) + ")";
        case TheoremSelector::Which::T2i:
            return "t2i(t=" + std::to_string(sel.param) + ")";
        case TheoremSelector::Which::T2ii:
            return "t2ii(q=" + std::to_string(sel.param) + ")";
    }
    return "?";
}

}  // namespace

std::uint64_t canonical_form(const Graph& g) {
    int n = g.order();
    if (n > 8) throw std::invalid_argument("canonical_form supports n <= 8");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t bits = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                bits = (bits << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
            }
        }
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string SweepResult::to_csv() const {
    std::string out = "n,seed_index,lambda1,threshold,margin,tau,verdict\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n);
        out += ',';
        out += std::to_string(row.index);
        out += ',';
        out += double_str(row.lambda1);
        out += ',';
        out += double_str(row.threshold);
        out += ',';
        out += double_str(row.margin);
        out += ',';
        if (row.tau) out += row.tau->str();
        out += ',';
        out += verdict_name(row.verdict);
        out += '\n';
    }
    return out;
}

SweepResult sweep(const Population& pop, const TheoremSelector& sel, int limit, int threads) {
    std::vector<Graph> random_graphs;
    std::vector<std::pair<int, std::uint64_t>> exhaustive_items;
    std::string pop_label;
    const bool random_mode = std::holds_alternative<RandomPopulation>(pop);

    if (const auto* rnd = std::get_if<RandomPopulation>(&pop)) {
        random_graphs = sample_connected(
            {rnd->n, rnd->count, rnd->seed, rnd->min_delta});
        pop_label = "random(n=" + std::to_string(rnd->n) + ",count=" + std::to_string(rnd->count) +
                    ",seed=" + std::to_string(rnd->seed) +
                    ",min_delta=" + std::to_string(rnd->min_delta) + ")";
    } else {
        const auto& ex = std::get<ExhaustivePopulation>(pop);
        if (ex.max_n < 1 || ex.max_n > 8) {
            throw std::invalid_argument("exhaustive sweep supports 1 <= max_n <= 8");
        }
        for (int n = 1; n <= ex.max_n; ++n) {
            int pairs = n * (n - 1) / 2;
            std::unordered_set<std::uint64_t> seen;
            for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
                Graph g = graph_from_edge_mask(n, mask);
                if (!is_connected(g)) continue;
                if (ex.isomorph_reject && !seen.insert(canonical_form(g)).second) continue;
                exhaustive_items.emplace_back(n, mask);
            }
        }
        pop_label = "exhaustive(max_n=" + std::to_string(ex.max_n) +
                    (ex.isomorph_reject ? ",isomorph_reject" : "") + ")";
    }

    size_t total = random_mode ? random_graphs.size() : exhaustive_items.size();
    std::vector<TheoremClassification> results(total);
    auto evaluate = [&](size_t i) {
        const Graph g = random_mode ? random_graphs[i]
                                    : graph_from_edge_mask(exhaustive_items[i].first,
                                                           exhaustive_items[i].second);
        results[i] = check_theorem(g, sel, limit);
    };
    parallel_for(total, resolve_threads(threads, total), evaluate);

    SweepResult out;
    out.report.name = "sweep(" + selector_label(sel) + "," + pop_label + ")";
    long tallies[5] = {0, 0, 0, 0, 0};
    for (size_t i = 0; i < total; ++i) {
        const auto& res = results[i];
        ++tallies[static_cast<int>(res.verdict)];
        if (res.verdict == Verdict::HypothesisNotMet) continue;
        int n = random_mode ? random_graphs[i].order() : exhaustive_items[i].first;
        SweepRow row;
        row.n = n;
        row.index = static_cast<long>(i);
        row.lambda1 = res.lambda1;
        row.threshold = res.threshold;
        row.margin = res.margin;
        if (res.tough) row.tau = res.tough->tau;
        row.verdict = res.verdict;
        out.rows.push_back(row);

        CaseRecord rec;
        rec.name = "graph[" + std::to_string(i) + "]";
        rec.ok = res.verdict != Verdict::Counterexample;
        rec.margin = res.margin;
        rec.values = {{"n", static_cast<double>(n)},
                      {"lambda1", res.lambda1},
                      {"threshold", res.threshold}};
        if (res.tough) rec.values.emplace_back("tau", res.tough->tau.to_double());
        out.report.details.push_back(std::move(rec));
    }
    finalize(out.report);
    out.report.counts.emplace_back("graphs", static_cast<long>(total));
    for (int v = 0; v < 5; ++v) {
        out.report.counts.emplace_back(verdict_name(static_cast<Verdict>(v)), tallies[v]);
    }
    out.report.passed = tallies[static_cast<int>(Verdict::Counterexample)] == 0;
    return out;
}

}  // namespace spectough
