#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spectough/cli.hpp"
#include "spectough/families.hpp"
#include "spectough/graph_io.hpp"

using namespace spectough;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    TempFile(const std::string& name, const std::string& content) {
        path_ = std::filesystem::temp_directory_path() / ("spectough_test_" + name);
        std::ofstream f(path_);
        f << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string str() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("dsr on a complete graph") {
    TempFile f("k5.g6", write_graph(Graph::complete(5), GraphFormat::Graph6));
    Run r = run_cli({"dsr", f.str()});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::fabs(j["lambda1"].get<double>() - 4.0) <= 1e-10);
    CHECK(j["method"] == "power");
    CHECK(j["residual"].get<double>() <= 1e-10);
    CHECK(r.err.empty());
}

TEST_CASE("toughness of the t=1 tight family") {
    Graph g = build_extremal(TIntTough{14, 1});
    TempFile f("star.el", write_graph(g, GraphFormat::EdgeList));
    Run r = run_cli({"toughness", f.str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"tau\":\"1/2\"") != std::string::npos);
}

TEST_CASE("bounds and wiener") {
    Graph g = build_extremal(OneTough{16, 2});
    TempFile f("one.g6", write_graph(g, GraphFormat::Graph6));
    Run b = run_cli({"bounds", f.str()});
    CHECK(b.code == 0);
    CHECK(b.out.find("\"lower\":18.125") != std::string::npos);
    Run w = run_cli({"wiener", f.str()});
    CHECK(w.code == 0);
    CHECK(w.out == "{\"w\":145,\"w2\":195}\n");
}

TEST_CASE("family emits graph6") {
    Run r = run_cli({"family", "--kind", "one-tough", "--n", "16", "--delta", "2"});
    CHECK(r.code == 0);
    std::string expected = write_graph(build_extremal(OneTough{16, 2}), GraphFormat::Graph6);
    CHECK(r.out == expected + "\n");

    Run split = run_cli({"family", "--kind", "split", "--s", "2", "--parts", "12,1,1"});
    CHECK(split.code == 0);
    CHECK(split.out == r.out);  // the same graph

    Run frac = run_cli({"family", "--kind", "t-frac", "--n", "14", "--q", "3"});
    CHECK(frac.code == 0);
    Graph parsed = parse_graph(frac.out.substr(0, frac.out.size() - 1), GraphFormat::Graph6);
    CHECK(parsed.order() == 14);
}

TEST_CASE("quotient reports the exact charpoly") {
    Run r = run_cli({"quotient", "--kind", "rdelta", "--n", "16", "--delta", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"charpoly\":[\"1\",\"-14\",\"-89\",\"-26\"]") != std::string::npos);
    CHECK(r.out.find("\"equitable\":true") != std::string::npos);
    CHECK(r.out.find("\"block_sizes\":[2,12,2]") != std::string::npos);

    Run rts = run_cli({"quotient", "--kind", "rts", "--n", "15", "--t", "1/2", "--s", "1"});
    CHECK(rts.code == 0);
    CHECK(rts.out.find("\"block_sizes\":[2,12,1]") != std::string::npos);
}

TEST_CASE("verify subcommand exit codes and output") {
    Run cp = run_cli({"verify", "--check", "charpoly", "--kind", "rdelta", "--n", "16",
                      "--delta", "2"});
    CHECK(cp.code == 0);
    CHECK(cp.out.find("\"passed\":true") != std::string::npos);

    Run comp = run_cli({"verify", "--check", "compmin", "--n", "8", "--s", "2", "--c", "3",
                        "--p", "1"});
    CHECK(comp.code == 0);

    Run perron = run_cli({"verify", "--check", "perron", "--n", "16", "--s", "2", "--c", "3",
                          "--p", "1"});
    CHECK(perron.code == 0);

    Run lemma2 = run_cli({"verify", "--check", "lemma2", "--kind", "one-tough", "--n", "16",
                          "--delta", "2"});
    CHECK(lemma2.code == 0);

    TempFile f("k4.g6", write_graph(Graph::complete(4), GraphFormat::Graph6));
    Run lemma1 = run_cli({"verify", "--check", "lemma1", f.str()});
    CHECK(lemma1.code == 0);
    Run bounds = run_cli({"verify", "--check", "bounds", f.str()});
    CHECK(bounds.code == 0);

    Run unknown = run_cli({"verify", "--check", "nonsense"});
    CHECK(unknown.code == 2);
    CHECK_FALSE(unknown.err.empty());
}

TEST_CASE("check classifies the extremal family") {
    Graph g = build_extremal(OneTough{16, 2});
    TempFile f("ext.g6", write_graph(g, GraphFormat::Graph6));
    Run r = run_cli({"check", "--theorem", "t1", "--param", "2", f.str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"verdict\":\"extremal-match\"") != std::string::npos);
    CHECK(r.out.find("\"tau\":\"2/3\"") != std::string::npos);
}

TEST_CASE("sweep json and csv") {
    std::vector<std::string> args{"sweep", "--theorem", "t1",     "--param", "2",
                                  "--model", "random",  "--n",    "16",      "--count",
                                  "5",       "--seed",  "7",      "--min-delta", "2"};
    Run j = run_cli(args);
    CHECK(j.code == 0);
    CHECK(j.out.find("\"passed\":true") != std::string::npos);

    auto csv_args = args;
    csv_args.push_back("--format");
    csv_args.push_back("csv");
    Run c = run_cli(csv_args);
    CHECK(c.code == 0);
    CHECK(c.out.rfind("n,seed_index,lambda1,threshold,margin,tau,verdict\n", 0) == 0);
    CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 6);  // header + 5 rows

    // identical argv implies byte-identical stdout
    Run again = run_cli(args);
    CHECK(again.out == j.out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"dsr"}).code == 2);                        // missing file
    CHECK(run_cli({"dsr", "x.g6", "--bogus"}).code == 2);     // unknown flag
    Run r = run_cli({"dsr", "x.g6", "--bogus"});
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
}

TEST_CASE("input errors exit 3") {
    CHECK(run_cli({"dsr", "/nonexistent/path.g6"}).code == 3);
    TempFile noext("plain", "3 2\n0 1\n1 2");
    CHECK(run_cli({"dsr", noext.str()}).code == 3);  // cannot sniff the format
    Run ok = run_cli({"dsr", noext.str(), "--format", "el"});
    CHECK(ok.code == 0);

    TempFile bad("bad.el", "2 1\n0 0");
    Run parse = run_cli({"dsr", bad.str()});
    CHECK(parse.code == 3);
    CHECK(parse.err.find("line 2") != std::string::npos);

    TempFile disc("disc.el", "4 2\n0 1\n2 3");
    CHECK(run_cli({"dsr", disc.str()}).code == 3);
    CHECK(run_cli({"toughness", disc.str()}).code == 3);

    TempFile k5("k5b.g6", write_graph(Graph::complete(5), GraphFormat::Graph6));
    CHECK(run_cli({"toughness", k5.str()}).code == 3);  // undefined for complete graphs
}

TEST_CASE("help exits zero") {
    Run r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("spectough") != std::string::npos);
}
