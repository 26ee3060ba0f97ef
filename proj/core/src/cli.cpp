#include "spectough/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectough/distance.hpp"
#include "spectough/errors.hpp"
#include "spectough/families.hpp"
#include "spectough/graph_io.hpp"
#include "spectough/spectral.hpp"
#include "spectough/toughness.hpp"
#include "spectough/verify.hpp"

namespace spectough::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

Graph load_graph(const std::string& path, const std::string& format_flag, std::istream& in) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw Error("cannot read file: " + path);
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    GraphFormat format;
    if (format_flag == "g6") {
        format = GraphFormat::Graph6;
    } else if (format_flag == "el") {
        format = GraphFormat::EdgeList;
    } else if (path.ends_with(".g6")) {
        format = GraphFormat::Graph6;
    } else if (path.ends_with(".el")) {
        format = GraphFormat::EdgeList;
    } else {
        throw Error("cannot infer format of '" + path + "'; pass --format g6|el");
    }
    return parse_graph(text, format);
}

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw UsageError("bad part size '" + item + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw UsageError("--parts needs a comma-separated list");
    return parts;
}

FamilyKind parse_family(const std::string& kind, int n, int delta, int t, int q, int s,
                        const std::string& parts) {
    if (kind == "one-tough") return OneTough{n, delta};
    if (kind == "t-int") return TIntTough{n, t};
    if (kind == "t-frac") return TFracTough{n, q};
    if (kind == "split") return SplitFamilyParams{s, parse_parts(parts)};
    throw UsageError("unknown family kind '" + kind + "'");
}

TheoremSelector parse_selector(const std::string& name, int param) {
    TheoremSelector sel;
    if (name == "t1") {
        sel.which = TheoremSelector::Which::T1;
    } else if (name == "t2i") {
        sel.which = TheoremSelector::Which::T2i;
    } else if (name == "t2ii") {
        sel.which = TheoremSelector::Which::T2ii;
    } else {
        throw UsageError("unknown theorem '" + name + "'");
    }
    sel.param = param;
    return sel;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"spectough: distance-spectral and toughness toolkit"};
    app.require_subcommand(1);

    // common option storage
    std::string file, format_flag, kind, parts, theorem, model = "random", sweep_format = "json",
                      check_name, t_text = "1";
    int n = 0, delta = 2, t_int = 1, q = 1, s = 1, c = 2, p = 1, param = 1;
    int limit = 24, max_n = 5, count = 100, min_delta = 1, threads = 0;
    long long max_iter = 100000;
    std::uint64_t seed = 0;
    double tol = 1e-10;
    bool isomorph_reject = false;

    auto* dsr = app.add_subcommand("dsr", "distance spectral radius of a graph");
    dsr->add_option("file", file)->required();
    dsr->add_option("--format", format_flag, "g6 or el");
    dsr->add_option("--tol", tol, "residual tolerance");
    dsr->add_option("--max-iter", max_iter, "power-iteration cap before the Jacobi fallback");

    auto* tough = app.add_subcommand("toughness", "exact toughness by cut-set enumeration");
    tough->add_option("file", file)->required();
    tough->add_option("--format", format_flag);
    tough->add_option("--limit", limit, "enumeration guard; cost grows as 2^n");

    auto* bounds = app.add_subcommand("bounds", "Wiener-based bracket for the spectral radius");
    bounds->add_option("file", file)->required();
    bounds->add_option("--format", format_flag);

    auto* wiener = app.add_subcommand("wiener", "Wiener index and its squared variant");
    wiener->add_option("file", file)->required();
    wiener->add_option("--format", format_flag);

    auto* family = app.add_subcommand("family", "emit an extremal family graph as graph6");
    family->add_option("--kind", kind, "one-tough | t-int | t-frac | split")->required();
    family->add_option("--n", n);
    family->add_option("--delta", delta);
    family->add_option("--t", t_int);
    family->add_option("--q", q);
    family->add_option("--s", s);
    family->add_option("--parts", parts, "comma-separated part sizes, nonincreasing");

    auto* quotient = app.add_subcommand("quotient", "closed-form quotient matrix of a family");
    quotient->add_option("--kind", kind, "rdelta | rs | rsdelta | rts")->required();
    quotient->add_option("--n", n)->required();
    quotient->add_option("--delta", delta);
    quotient->add_option("--s", s);
    quotient->add_option("--t", t_text, "rational, e.g. 1/2");

    auto* verify = app.add_subcommand("verify", "run one mechanical check");
    verify->add_option("--check", check_name, "lemma1 | lemma2 | bounds | compmin | perron | charpoly")
        ->required();
    verify->add_option("file", file);
    verify->add_option("--format", format_flag);
    verify->add_option("--kind", kind);
    verify->add_option("--n", n);
    verify->add_option("--delta", delta);
    verify->add_option("--t", t_text);
    verify->add_option("--q", q);
    verify->add_option("--s", s);
    verify->add_option("--c", c);
    verify->add_option("--p", p);
    verify->add_option("--parts", parts);

    auto* check = app.add_subcommand("check", "classify a graph against a spectral condition");
    check->add_option("--theorem", theorem, "t1 | t2i | t2ii")->required();
    check->add_option("--param", param, "delta for t1, t for t2i, q for t2ii")->required();
    check->add_option("--limit", limit);
    check->add_option("file", file)->required();
    check->add_option("--format", format_flag);

    auto* sweep_cmd = app.add_subcommand("sweep", "classify a whole population");
    sweep_cmd->add_option("--theorem", theorem)->required();
    sweep_cmd->add_option("--param", param)->required();
    sweep_cmd->add_option("--model", model, "random | exhaustive");
    sweep_cmd->add_option("--n", n);
    sweep_cmd->add_option("--count", count);
    sweep_cmd->add_option("--seed", seed);
    sweep_cmd->add_option("--min-delta", min_delta);
    sweep_cmd->add_option("--max-n", max_n);
    sweep_cmd->add_flag("--isomorph-reject", isomorph_reject, "exact but exponential");
    sweep_cmd->add_option("--limit", limit);
    sweep_cmd->add_option("--threads", threads, "0 = SPECTOUGH_THREADS or hardware");
    sweep_cmd->add_option("--format", sweep_format, "json | csv");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    if (dsr->parsed()) {
        Graph g = load_graph(file, format_flag, std::cin);
        out << spectral_radius(distance_matrix(g), tol, max_iter).to_json() << "\n";
        return 0;
    }
    if (tough->parsed()) {
        Graph g = load_graph(file, format_flag, std::cin);
        out << toughness_exact(g, {.limit = limit}).to_json() << "\n";
        return 0;
    }
    if (bounds->parsed()) {
        Graph g = load_graph(file, format_flag, std::cin);
        auto b = distance_bounds(g);
        ordered_json j;
        j["lower"] = b.lower;
        j["upper"] = b.upper;
        out << j.dump() << "\n";
        return 0;
    }
    if (wiener->parsed()) {
        Graph g = load_graph(file, format_flag, std::cin);
        auto w = wiener_indices(g);
        ordered_json j;
        j["w"] = w.w;
        j["w2"] = w.w2;
        out << j.dump() << "\n";
        return 0;
    }
    if (family->parsed()) {
        Graph g = build_extremal(parse_family(kind, n, delta, t_int, q, s, parts));
        out << write_graph(g, GraphFormat::Graph6) << "\n";
        return 0;
    }
    if (quotient->parsed()) {
        QuotientMatrix qm;
        if (kind == "rdelta") {
            qm = rdelta_quotient(n, delta);
        } else if (kind == "rs") {
            qm = rs_quotient(n, s);
        } else if (kind == "rsdelta") {
            qm = rsdelta_quotient(n, s, delta);
        } else if (kind == "rts") {
            qm = rts_quotient(n, Rational::parse(t_text), s);
        } else {
            throw UsageError("unknown quotient kind '" + kind + "'");
        }
        ordered_json j;
        j["kind"] = kind;
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < qm.m; ++i) {
            ordered_json row = ordered_json::array();
            for (int jj = 0; jj < qm.m; ++jj) row.push_back(qm.at(i, jj).to_double());
            rows.push_back(std::move(row));
        }
        j["entries"] = rows;
        j["block_sizes"] = qm.block_sizes;
        j["equitable"] = qm.equitable;
        ordered_json cp = ordered_json::array();
        for (const auto& coeff : charpoly3(qm)) cp.push_back(coeff.str());
        j["charpoly"] = cp;
        j["lambda1"] = qm.spectral_radius();
        out << j.dump() << "\n";
        return 0;
    }
    if (verify->parsed()) {
        CheckReport report;
        if (check_name == "lemma1" || check_name == "bounds") {
            if (file.empty()) throw UsageError("--check " + check_name + " needs a graph file");
            Graph g = load_graph(file, format_flag, std::cin);
            report = check_name == "lemma1" ? check_lemma1(g) : check_bounds(g);
        } else if (check_name == "lemma2") {
            report = check_lemma2_consistency(parse_family(kind, n, delta, t_int, q, s, parts));
        } else if (check_name == "compmin") {
            report = check_composition_min(n, s, c, p);
        } else if (check_name == "perron") {
            report = check_perron_ratio(n, s, c, p);
        } else if (check_name == "charpoly") {
            if (kind == "rdelta") {
                report = check_charpoly(RdeltaParams{n, delta});
            } else if (kind == "rsdelta") {
                report = check_charpoly(RsDeltaParams{n, s, delta});
            } else if (kind == "rts") {
                report = check_charpoly(RtsParams{n, Rational::parse(t_text), s});
            } else {
                throw UsageError("charpoly kind must be rdelta, rsdelta, or rts");
            }
        } else {
            throw UsageError("unknown check '" + check_name + "'");
        }
        out << report.to_json() << "\n";
        return report.passed ? 0 : 1;
    }
    if (check->parsed()) {
        Graph g = load_graph(file, format_flag, std::cin);
        auto result = check_theorem(g, parse_selector(theorem, param), limit);
        out << result.to_json() << "\n";
        return result.verdict == Verdict::Counterexample ? 1 : 0;
    }
    if (sweep_cmd->parsed()) {
        Population pop;
        if (model == "random") {
            if (n < 1) throw UsageError("random sweep needs --n");
            pop = RandomPopulation{n, count, seed, min_delta};
        } else if (model == "exhaustive") {
            pop = ExhaustivePopulation{max_n, isomorph_reject};
        } else {
            throw UsageError("unknown sweep model '" + model + "'");
        }
        SweepResult result = sweep(pop, parse_selector(theorem, param), limit, threads);
        if (sweep_format == "csv") {
            out << result.to_csv();
        } else if (sweep_format == "json") {
            out << result.report.to_json() << "\n";
        } else {
            throw UsageError("sweep format must be json or csv");
        }
        return result.report.passed ? 0 : 1;
    }
    throw UsageError("no subcommand selected");
}

}  // namespace

}  // namespace spectough::cli
