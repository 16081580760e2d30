#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "pwdyn/catalog.hpp"
#include "pwdyn/config.hpp"
#include "pwdyn/report.hpp"

using namespace pwdyn;
using nlohmann::json;

namespace {

// Smaller sampler so the full pipeline stays quick; the exact grid
// criterion carries the evidence for tent and g.
AnalysisConfig quick_config() {
    AnalysisConfig c;
    c.sample.n_pairs = 300;
    return c;
}

std::string scalar_text(const json& v) {
    if (v.is_number_float()) {
        return format_entropy(v.get<double>());
    }
    return v.dump();
}

// Every scalar number or boolean stored under an object key shows up in the
// text rendering as "key: value".
void check_text_agrees(const json& v, const std::string& text) {
    if (v.is_object()) {
        for (const auto& [key, child] : v.items()) {
            if (child.is_number() || child.is_boolean()) {
                const std::string line = key + ": " + scalar_text(child) + "\n";
                CAPTURE(line);
                CHECK(text.find(line) != std::string::npos);
            } else {
                check_text_agrees(child, text);
            }
        }
    } else if (v.is_array()) {
        for (const auto& child : v) {
            check_text_agrees(child, text);
        }
    }
}

}  // namespace

TEST_CASE("catalog contents") {
    for (const char* name : {"identity", "tent", "sqrt_tent", "half", "flip"}) {
        CHECK_NOTHROW(catalog_entry(name));
    }
    CHECK(catalog_entry("tent").map == oracle::tent());
    CHECK(catalog_entry("sqrt_tent").map == oracle::g());
    CHECK(catalog_entry("half").map == oracle::half());
    CHECK(catalog_entry("flip").map == oracle::flip());
    CHECK(catalog_entry("identity").map == oracle::identity());
    CHECK_THROWS_AS(catalog_entry("nope"), std::invalid_argument);
}

TEST_CASE("sqrt_tent realizes the stated properties") {
    const PWLMap& g = catalog_entry("sqrt_tent").map;
    const ClosedInterval left(Rational(0), Rational(1, 2));
    const ClosedInterval right(Rational(1, 2), Rational(1));
    CHECK(interval_image(g, left) == right);
    CHECK(interval_image(g, right) == left);
    // g² is the tent on [1/2,1] and the upside-down tent on [0,1/2]
    const PWLMap g2 = power(g, 2);
    for (const Rational& x : oracle::dyadic_grid(oracle::identity(), 7)) {
        if (x >= Rational(1, 2)) {
            CHECK(g2(x) == Rational(1, 2) + oracle::interp(oracle::tent(), Rational(2) * x - Rational(1)) / Rational(2));
        } else {
            CHECK(g2(x) == Rational(1, 2) - oracle::interp(oracle::tent(), Rational(2) * x) / Rational(2));
        }
    }
}

TEST_CASE("self test passes for every expected record") {
    const auto results = catalog_self_test();
    CHECK(results.size() >= 5);
    for (const SelfTestResult& r : results) {
        CAPTURE(r.name);
        CAPTURE(r.failures.size());
        CHECK(r.passed);
    }
}

TEST_CASE("report: tent") {
    const ReportDocument d = corollary_report("tent", oracle::tent(), quick_config());
    CHECK(d.corollary.dense_chaos_evidence);
    CHECK(d.corollary.checked);
    CHECK(d.corollary.f2_horseshoe);
    CHECK(d.corollary.entropy_bound);
    CHECK(d.corollary.type_bound);
    CHECK(d.corollary.all_green);
    CHECK(d.corollary.violations.empty());
    CHECK_FALSE(d.corollary.entropy_attains_infimum);
    CHECK(d.horseshoe_f1.has_value());
    CHECK(d.type.str() == "Finite(3)");
    REQUIRE(d.entropy_markov);
    CHECK(d.entropy_markov->value == doctest::Approx(std::numbers::ln2));
    CHECK(d.entropy_source == "perron");
}

TEST_CASE("report: g attains the infimum") {
    const ReportDocument d = corollary_report("sqrt_tent", oracle::g(), quick_config());
    CHECK(d.corollary.all_green);
    CHECK(d.corollary.checked);
    CHECK(d.corollary.entropy_attains_infimum);
    CHECK(d.corollary.type_equals_six);
    CHECK_FALSE(d.horseshoe_f1.has_value());
    REQUIRE(d.horseshoe_f2);
    CHECK(std::fabs(d.entropy_for_check - std::numbers::ln2 / 2.0) <= 1e-9);
    CHECK(d.type.str() == "Finite(6)");
    REQUIRE(d.markov_irreducible);
    CHECK(*d.markov_irreducible);
}

TEST_CASE("report: identity is vacuous") {
    const ReportDocument d = corollary_report("identity", oracle::identity(), quick_config());
    CHECK_FALSE(d.corollary.dense_chaos_evidence);
    CHECK_FALSE(d.corollary.checked);
    CHECK(d.corollary.all_green);
    CHECK(d.corollary.violations.empty());
}

TEST_CASE("report: non-Markov map falls back to the horseshoe bound") {
    const ReportDocument d = corollary_report("tent_9_10", catalog_entry("tent_9_10").map, quick_config());
    CHECK_FALSE(d.markov.has_value());
    CHECK(d.entropy_source == "horseshoe_bound");
    CHECK(d.corollary.all_green);
}

TEST_CASE("report JSON has stable keys and agrees with the text rendering") {
    const ReportDocument d = corollary_report("sqrt_tent", oracle::g(), quick_config());
    const json j = to_json(d);
    for (const char* key : {"map", "nodes", "entropy", "markov", "horseshoe", "nested_structure", "periods", "type",
                            "chaos", "corollary", "self_test"}) {
        CAPTURE(key);
        CHECK(j.contains(key));
    }
    CHECK(j["markov"]["matrix"] == json::array({"011", "100", "100"}));
    CHECK(j["markov"]["cuts"] == json::array({"0", "1/2", "3/4", "1"}));
    CHECK(j["periods"]["set"] == json::array({1, 2, 4, 6, 8}));
    CHECK(j["type"]["verdict"] == "Finite(6)");
    CHECK(j["corollary"]["all_green"] == true);
    CHECK(j["horseshoe"]["f2"]["J"] == json::array({"0", "1/4"}));
    CHECK(j["horseshoe"]["f1"].is_null());
    CHECK(format_entropy(j["entropy"]["markov"]["value"].get<double>()) == "0.34657359028");
    check_text_agrees(j, render_text(j));
}

TEST_CASE("config overrides") {
    AnalysisConfig c;
    apply_config_json(c, R"({"p_max": 6, "seed": 9, "snoha_delta": "1/3", "ly_horizon": 500, "max_nodes": 1000})");
    CHECK(c.p_max == 6);
    CHECK(c.sample.seed == 9);
    CHECK(c.snoha_delta == Rational(1, 3));
    CHECK(c.ly.horizon == 500);
    CHECK(c.limits.max_nodes == 1000);
    CHECK_THROWS_AS(apply_config_json(c, R"({"bogus": 1})"), std::invalid_argument);
    CHECK_THROWS(apply_config_json(c, "[1, 2]"));
    CHECK_THROWS(apply_config_json(c, "{not json"));
    CHECK_THROWS(apply_config_file(c, "/nonexistent.json"));
}
