#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pwdyn/cli.hpp"

using pwdyn::run_command;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("pwdyn_test_" + name);
    std::ofstream(path) << contents;
    return path;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("compare") {
    Run r = run({"compare", "3", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "3 ◁ 5\n");
    CHECK(run({"compare", "1", "2"}).out == "1 ▷ 2\n");
    CHECK(run({"compare", "6", "6"}).out == "6 = 6\n");
    r = run({"--json", "compare", "6", "4"});
    CHECK(json::parse(r.out)["order"] == "before");
    CHECK(run({"compare", "0", "4"}).code == 2);
}

TEST_CASE("horseshoe exit codes") {
    Run r = run({"horseshoe", "--builtin", "sqrt_tent", "--iterate", "1"});
    CHECK(r.code == 1);
    CHECK(r.out.find("not found") != std::string::npos);
    r = run({"--builtin", "sqrt_tent", "horseshoe", "--iterate", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("J = [0, 1/4], K = [1/4, 1/2]") != std::string::npos);
    r = run({"--json", "--builtin", "tent", "horseshoe"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["found"] == true);
    CHECK(j["J"] == json::array({"0", "1/2"}));
}

TEST_CASE("eval, entropy, periods, type") {
    CHECK(run({"--builtin", "tent", "eval", "1/3"}).out == "2/3\n");
    CHECK(run({"--builtin", "sqrt_tent", "eval", "7/8"}).out == "1/4\n");
    CHECK(run({"--builtin", "tent", "eval", "1/3", "--iterate", "2"}).out == "2/3\n");
    CHECK(run({"--builtin", "tent", "eval", "2"}).code == 2);
    CHECK(run({"--builtin", "tent", "eval", "x"}).code == 2);

    Run r = run({"--json", "--builtin", "sqrt_tent", "entropy"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(std::fabs(j["markov"]["value"].get<double>() - 0.346573590280) <= 1e-9);
    CHECK(j["matrix"] == json::array({"011", "100", "100"}));
    CHECK(j["horseshoe_bound"]["iterate_used"] == 2);

    r = run({"--builtin", "tent_9_10", "entropy", "--n", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("no Markov partition") != std::string::npos);

    r = run({"--json", "--builtin", "sqrt_tent", "periods", "--max", "7"});
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["period_set"] == json::array({1, 2, 4, 6}));

    r = run({"--builtin", "sqrt_tent", "type", "--max", "7"});
    CHECK(r.out.rfind("Finite(6)", 0) == 0);
    r = run({"--builtin", "identity", "type", "--max", "4"});
    CHECK(r.out.find("AtMostPowersOfTwo(2^0)") != std::string::npos);
    CHECK(r.out.find("cannot be told apart") != std::string::npos);
}

TEST_CASE("map files") {
    const auto good = temp_file("g.txt", "# g\n0 1\n1/2 1/2\n3/4 0\n1 1/2\n");
    CHECK(run({"--map", good.string(), "eval", "7/8"}).out == "1/4\n");
    const auto bad = temp_file("bad.txt", "1 0\n0 1\n");
    Run r = run({"--map", bad.string(), "entropy"});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(run({"--map", "/nonexistent/map.txt", "entropy"}).code == 2);
    CHECK(run({"entropy"}).code == 2);
    CHECK(run({"--map", good.string(), "--builtin", "tent", "entropy"}).code == 2);
    CHECK(run({"--builtin", "nope", "entropy"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("help exits cleanly") {
    const Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("report") != std::string::npos);
}

TEST_CASE("ly-sample with csv") {
    const auto csv = std::filesystem::temp_directory_path() / "pwdyn_test_pairs.csv";
    Run r = run({"--builtin", "tent", "ly-sample", "--pairs", "40", "--horizon", "500", "--csv", csv.string(),
                 "--threshold", "0"});
    CHECK(r.code == 0);
    std::ifstream in(csv);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().rfind("x,y,max_sep,min_sep,is_ly\n", 0) == 0);
    CHECK(count_lines(buf.str()) == 41);

    r = run({"--json", "--builtin", "identity", "ly-sample", "--pairs", "40", "--horizon", "500"});
    CHECK(r.code == 1);
    CHECK(json::parse(r.out)["ly_fraction"] == 0.0);

    const Run a = run({"--json", "--seed", "5", "--builtin", "sqrt_tent", "ly-sample", "--pairs", "30"});
    const Run b = run({"--json", "--seed", "5", "--builtin", "sqrt_tent", "ly-sample", "--pairs", "30"});
    CHECK(a.out == b.out);
    CHECK(run({"--builtin", "tent", "ly-sample", "--delta", "0.1", "--eps", "0.5"}).code == 2);
}

TEST_CASE("snoha-grid") {
    CHECK(run({"--builtin", "tent", "snoha-grid"}).code == 0);
    CHECK(run({"--builtin", "sqrt_tent", "snoha-grid", "--delta", "1/4", "--eps", "0", "--horizon", "20"}).code == 0);
    CHECK(run({"--builtin", "identity", "snoha-grid"}).code == 1);
    CHECK(run({"--builtin", "tent", "snoha-grid", "--delta", "half"}).code == 2);
}

TEST_CASE("invariant-intervals, probe, graph, catalog") {
    Run r = run({"--builtin", "half", "invariant-intervals", "--extra", "1/8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[0, 1/8]\n") != std::string::npos);
    CHECK(r.out.find("[0, 1]\n") != std::string::npos);

    r = run({"--builtin", "tent", "probe", "--depth", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("structure found") != std::string::npos);
    CHECK(run({"--builtin", "identity", "probe"}).code == 1);

    r = run({"--builtin", "tent", "graph", "--iterate", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("x,y,x_exact,y_exact\n", 0) == 0);
    CHECK(count_lines(r.out) == 6);
    CHECK(r.out.find("0.25,1,1/4,1\n") != std::string::npos);

    r = run({"--json", "catalog"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.size() >= 5);
}

TEST_CASE("report") {
    const auto cfg = temp_file("cfg.json", R"({"n_pairs": 200})");
    Run r = run({"report", "--builtin", "sqrt_tent", "--json", "--config", cfg.string()});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["type"]["verdict"] == "Finite(6)");
    CHECK(j["corollary"]["all_green"] == true);
    CHECK(j["corollary"]["f2_horseshoe"] == true);
    CHECK(j["corollary"]["entropy_attains_infimum"] == true);
    CHECK(std::fabs(j["entropy"]["markov"]["value"].get<double>() - 0.34657359028) <= 1e-9);

    r = run({"report", "--builtin", "sqrt_tent", "--config", cfg.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("value: 0.34657359028") != std::string::npos);
    CHECK(r.out.find("all_green: true") != std::string::npos);

    const auto bogus = temp_file("bogus.json", R"({"nonsense": 1})");
    CHECK(run({"report", "--builtin", "tent", "--config", bogus.string()}).code == 2);
}
