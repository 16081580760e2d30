#include "pwdyn/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "pwdyn/map_io.hpp"
#include "pwdyn/sharkovskii.hpp"

namespace pwdyn {

namespace {

using nlohmann::json;

constexpr double kEntropyTolerance = 1e-9;

json interval_json(const ClosedInterval& j) {
    return json::array({j.lo().str(), j.hi().str()});
}

template <typename T>
json optional_json(const std::optional<T>& v) {
    return v ? to_json(*v) : json(nullptr);
}

const char* kind_name(TypeKind k) {
    switch (k) {
        case TypeKind::finite:
            return "finite";
        case TypeKind::at_most_powers_of_two:
            return "at_most_powers_of_two";
        case TypeKind::none:
            return "none";
    }
    return "?";
}

void render(std::ostringstream& out, const json& v, const std::string& indent);

void render_scalar(std::ostringstream& out, const json& v) {
    if (v.is_number_float()) {
        out << format_entropy(v.get<double>());
    } else if (v.is_string()) {
        out << v.get<std::string>();
    } else {
        out << v.dump();
    }
}

bool is_flat_array(const json& v) {
    if (!v.is_array()) {
        return false;
    }
    for (const auto& e : v) {
        if (e.is_structured()) {
            return false;
        }
    }
    return true;
}

void render_flat_array(std::ostringstream& out, const json& v) {
    out << '[';
    bool first = true;
    for (const auto& e : v) {
        if (!first) {
            out << ", ";
        }
        first = false;
        render_scalar(out, e);
    }
    out << ']';
}

void render(std::ostringstream& out, const json& v, const std::string& indent) {
    if (v.is_object()) {
        for (const auto& [key, child] : v.items()) {
            out << indent << key << ':';
            if (child.is_object() || (child.is_array() && !is_flat_array(child))) {
                out << '\n';
                render(out, child, indent + "  ");
            } else if (child.is_array()) {
                out << ' ';
                render_flat_array(out, child);
                out << '\n';
            } else {
                out << ' ';
                render_scalar(out, child);
                out << '\n';
            }
        }
    } else if (v.is_array()) {
        for (const auto& child : v) {
            if (child.is_object()) {
                out << indent << "-\n";
                render(out, child, indent + "  ");
            } else if (is_flat_array(child)) {
                out << indent << "- ";
                render_flat_array(out, child);
                out << '\n';
            } else {
                out << indent << "- ";
                render_scalar(out, child);
                out << '\n';
            }
        }
    } else {
        out << indent;
        render_scalar(out, v);
        out << '\n';
    }
}

}  // namespace

std::string format_entropy(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string matrix_row(const std::vector<std::uint8_t>& row) {
    std::string s;
    for (auto v : row) {
        s += v != 0 ? '1' : '0';
    }
    return s;
}

json to_json(const HorseshoeCertificate& c) {
    return {{"iterate", c.iterate},
            {"J", interval_json(c.j)},
            {"K", interval_json(c.k)},
            {"image_J", interval_json(c.image_j)},
            {"image_K", interval_json(c.image_k)}};
}

json to_json(const ChaosVerdict& v) {
    return {{"ly_fraction", v.ly_fraction},
            {"pairs_tested", v.pairs_tested},
            {"classification", to_string(v.classification)},
            {"delta", v.params.delta},
            {"eps_close", v.params.eps_close},
            {"horizon", v.params.horizon},
            {"burn_in", v.params.burn_in},
            {"caveat", v.caveat}};
}

json to_json(const EntropyEstimate& e) {
    json j = {{"value", e.value},
              {"method", to_string(e.method)},
              {"iterate_used", e.iterate_used},
              {"error_bound_note", e.error_bound_note}};
    if (!e.lap_counts.empty()) {
        j["lap_counts"] = e.lap_counts;
    }
    return j;
}

json to_json(const TypeVerdict& t) {
    return {{"verdict", t.str()},
            {"kind", kind_name(t.kind)},
            {"value", t.value},
            {"detected_periods", t.detected_periods},
            {"search_bound", t.search_bound}};
}

ReportDocument corollary_report(const std::string& name, const PWLMap& map, const AnalysisConfig& config) {
    ReportDocument doc{name, map};
    doc.self_test = catalog_self_test(config.p_max, config.horseshoe_max_iterate);

    doc.markov = markov_partition(map, config.markov_max_steps);
    if (doc.markov) {
        doc.entropy_markov = entropy_markov(map, config.markov_max_steps, config.perron_tol);
        doc.markov_irreducible = is_irreducible(doc.markov->matrix);
    }
    try {
        doc.entropy_lapcount = entropy_lapcount(map, config.lapcount_n, config.limits);
    } catch (const ResourceError& e) {
        doc.lapcount_error = e.what();
    }
    doc.entropy_horseshoe = entropy_lower_bound_horseshoe(map, config.horseshoe_max_iterate, config.limits);
    if (doc.entropy_markov) {
        doc.entropy_for_check = doc.entropy_markov->value;
        doc.entropy_source = "perron";
    } else {
        doc.entropy_for_check = doc.entropy_horseshoe.value;
        doc.entropy_source = "horseshoe_bound";
    }

    doc.horseshoe_f1 = find_horseshoe(map, 1, config.limits);
    try {
        doc.horseshoe_f2 = find_horseshoe(map, 2, config.limits);
    } catch (const ResourceError&) {
        // f^2 over the cap: reported as not found
    }
    doc.nested = nested_structure_probe(map, config.probe_depth, config.limits);

    doc.periods = period_set(map, config.p_max, config.limits);
    doc.type = sharkovskii_type_estimate(map, config.p_max, config.limits);

    doc.ly_sample = ly_density_sample(map, config.ly, config.sample);
    doc.snoha = snoha_interval_criterion(map, config.snoha_grid_k, config.snoha_delta, config.snoha_eps,
                                         config.snoha_horizon);

    CorollaryFlags& c = doc.corollary;
    c.dense_chaos_evidence = doc.ly_sample.classification == Classification::dense_chaos_evidence ||
                             doc.snoha.classification == Classification::dense_chaos_evidence;
    c.f2_horseshoe = doc.horseshoe_f2.has_value();
    c.entropy_bound = doc.entropy_for_check >= std::numbers::ln2 / 2.0 - kEntropyTolerance;
    c.type_bound = doc.type.kind == TypeKind::finite &&
                   sharkovskii_compare(doc.type.value, 6) != SharkovskiiOrder::after;
    c.entropy_attains_infimum = std::fabs(doc.entropy_for_check - std::numbers::ln2 / 2.0) <= kEntropyTolerance;
    c.type_equals_six = doc.type.kind == TypeKind::finite && doc.type.value == 6;
    c.checked = c.dense_chaos_evidence;
    if (c.checked) {
        if (!c.f2_horseshoe) {
            c.violations.emplace_back("dense-chaos evidence but no horseshoe found for f^2");
        }
        if (!c.entropy_bound) {
            c.violations.emplace_back("dense-chaos evidence but entropy " + format_entropy(doc.entropy_for_check) +
                                      " < log(2)/2");
        }
        if (!c.type_bound) {
            c.violations.emplace_back("dense-chaos evidence but type " + doc.type.str() + " is not <= 6");
        }
        c.all_green = c.violations.empty();
    }
    return doc;
}

json to_json(const ReportDocument& doc) {
    json j;
    j["map"] = doc.map_name;
    json nodes = json::array();
    for (const Node& n : doc.map.nodes()) {
        nodes.push_back(json::array({n.x.str(), n.y.str()}));
    }
    j["nodes"] = nodes;

    json entropy;
    entropy["markov"] = optional_json(doc.entropy_markov);
    entropy["lapcount"] = optional_json(doc.entropy_lapcount);
    if (!doc.lapcount_error.empty()) {
        entropy["lapcount_error"] = doc.lapcount_error;
    }
    entropy["horseshoe_bound"] = to_json(doc.entropy_horseshoe);
    entropy["value_for_check"] = doc.entropy_for_check;
    entropy["source_for_check"] = doc.entropy_source;
    j["entropy"] = entropy;

    if (doc.markov) {
        json cuts = json::array();
        for (const Rational& c : doc.markov->cuts) {
            cuts.push_back(c.str());
        }
        json rows = json::array();
        for (const auto& row : doc.markov->matrix) {
            rows.push_back(matrix_row(row));
        }
        j["markov"] = {{"cuts", cuts}, {"matrix", rows}, {"irreducible", *doc.markov_irreducible}};
    } else {
        j["markov"] = nullptr;
    }

    j["horseshoe"] = {{"f1", optional_json(doc.horseshoe_f1)}, {"f2", optional_json(doc.horseshoe_f2)}};

    json levels = json::array();
    for (const NestedLevel& l : doc.nested.levels) {
        levels.push_back({{"interval", interval_json(l.interval)}, {"f2_certificate", optional_json(l.certificate)}});
    }
    j["nested_structure"] = {{"levels", levels}, {"structure_found", doc.nested.structure_found()}};

    j["periods"] = {{"set", doc.periods.periods},
                    {"requested_bound", doc.periods.requested_bound},
                    {"achieved_bound", doc.periods.achieved_bound}};
    j["type"] = to_json(doc.type);

    j["chaos"] = {{"ly_sample", to_json(doc.ly_sample)}, {"snoha_grid", to_json(doc.snoha)}};

    const CorollaryFlags& c = doc.corollary;
    j["corollary"] = {{"dense_chaos_evidence", c.dense_chaos_evidence},
                      {"checked", c.checked},
                      {"f2_horseshoe", c.f2_horseshoe},
                      {"entropy_at_least_log2_over_2", c.entropy_bound},
                      {"type_at_most_6", c.type_bound},
                      {"all_green", c.all_green},
                      {"entropy_attains_infimum", c.entropy_attains_infimum},
                      {"type_equals_6", c.type_equals_six},
                      {"violations", c.violations}};

    json st = json::array();
    for (const SelfTestResult& r : doc.self_test) {
        st.push_back({{"name", r.name}, {"passed", r.passed}, {"failures", r.failures}});
    }
    j["self_test"] = st;
    return j;
}

std::string render_text(const json& doc) {
    std::ostringstream out;
    render(out, doc, "");
    return out.str();
}

}  // namespace pwdyn
