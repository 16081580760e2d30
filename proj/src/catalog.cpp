#include "pwdyn/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pwdyn/horseshoe.hpp"
#include "pwdyn/markov.hpp"

namespace pwdyn {

namespace {

PWLMap make(std::initializer_list<std::pair<Rational, Rational>> pts) {
    std::vector<Node> nodes;
    for (const auto& [x, y] : pts) {
        nodes.push_back({x, y});
    }
    return PWLMap(std::move(nodes));
}

std::vector<CatalogEntry> build() {
    const Rational half(1, 2);
    std::vector<CatalogEntry> out;
    out.push_back({"identity", "x -> x on [0,1]", PWLMap::identity(0, 1),
                   ExpectedProperties{0.0, TypeKind::at_most_powers_of_two, 1, std::nullopt}});
    out.push_back({"tent", "tent map, peak (1/2, 1)", make({{0, 0}, {half, 1}, {1, 0}}),
                   ExpectedProperties{std::numbers::ln2, TypeKind::finite, 3, 1}});
    out.push_back({"sqrt_tent", "square root of the tent map; swaps [0,1/2] and [1/2,1]",
                   make({{0, 1}, {half, half}, {Rational(3, 4), 0}, {1, half}}),
                   ExpectedProperties{std::numbers::ln2 / 2.0, TypeKind::finite, 6, 2}});
    out.push_back({"half", "x -> x/2 on [0,1]", make({{0, 0}, {1, half}}),
                   ExpectedProperties{0.0, TypeKind::at_most_powers_of_two, 1, std::nullopt}});
    out.push_back({"flip", "x -> 1-x on [0,1]", make({{0, 1}, {1, 0}}),
                   ExpectedProperties{0.0, TypeKind::at_most_powers_of_two, 2, std::nullopt}});
    out.push_back({"tent_9_10", "tent map with peak (1/2, 9/10); slopes +-9/5, not Markov",
                   make({{0, 0}, {half, Rational(9, 10)}, {1, 0}}), std::nullopt});
    out.push_back({"nested_tent", "tent on [0,1/2] inside a tent-like map on [0,1]; [0,1/2] is invariant",
                   make({{0, 0}, {Rational(1, 4), half}, {half, 0}, {Rational(3, 4), 1}, {1, half}}),
                   ExpectedProperties{std::numbers::ln2, TypeKind::finite, 3, 1}});
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const CatalogEntry& e : catalog()) {
        if (e.name == name) {
            return e;
        }
    }
    throw std::invalid_argument("unknown built-in map '" + name + "'");
}

std::vector<SelfTestResult> catalog_self_test(std::size_t p_max, std::size_t horseshoe_max) {
    std::vector<SelfTestResult> results;
    for (const CatalogEntry& e : catalog()) {
        if (!e.expected) {
            continue;
        }
        const ExpectedProperties& want = *e.expected;
        SelfTestResult r{e.name, true, {}};
        auto fail = [&](std::string msg) {
            r.passed = false;
            r.failures.push_back(std::move(msg));
        };

        // lap counts are exact only for monotone maps, the one case without a partition here
        const auto markov = entropy_markov(e.map);
        const EntropyEstimate h = markov ? *markov : entropy_lapcount(e.map, 8);
        if (!markov && laps(e.map).size() > 1) {
            fail("no Markov partition");
        } else if (std::fabs(h.value - want.entropy) > 1e-9) {
            fail("entropy " + std::to_string(h.value) + " != " + std::to_string(want.entropy));
        }

        const TypeVerdict t = sharkovskii_type_estimate(e.map, p_max);
        if (t.kind != want.type_kind || t.value != want.type_value) {
            fail("type " + t.str());
        }

        std::optional<std::size_t> first;
        for (std::size_t n = 1; n <= horseshoe_max && !first; ++n) {
            if (find_horseshoe(e.map, n)) {
                first = n;
            }
        }
        if (first != want.horseshoe_iterate) {
            fail("first horseshoe iterate " + (first ? std::to_string(*first) : std::string("none")));
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace pwdyn
