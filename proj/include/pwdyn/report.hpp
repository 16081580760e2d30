#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pwdyn/catalog.hpp"
#include "pwdyn/chaos.hpp"
#include "pwdyn/config.hpp"
#include "pwdyn/horseshoe.hpp"
#include "pwdyn/markov.hpp"
#include "pwdyn/periodic.hpp"

namespace pwdyn {

/// Consequences of dense chaos that every densely chaotic interval map must
/// satisfy: f² has a horseshoe, h_top >= log(2)/2, and the type is ⊴ 6.
struct CorollaryFlags {
    bool dense_chaos_evidence = false;  // sampler or exact grid criterion
    bool checked = false;               // false: the checks are vacuous
    bool f2_horseshoe = false;
    bool entropy_bound = false;
    bool type_bound = false;
    bool all_green = true;
    bool entropy_attains_infimum = false;  // |h - log(2)/2| <= 1e-9
    bool type_equals_six = false;
    std::vector<std::string> violations;
};

struct ReportDocument {
    ReportDocument(std::string name, PWLMap m) : map_name(std::move(name)), map(std::move(m)) {}

    std::string map_name;
    PWLMap map;

    std::optional<MarkovData> markov;
    std::optional<EntropyEstimate> entropy_markov;
    std::optional<bool> markov_irreducible;
    std::optional<EntropyEstimate> entropy_lapcount;
    std::string lapcount_error;
    EntropyEstimate entropy_horseshoe;
    double entropy_for_check = 0.0;
    std::string entropy_source;

    std::optional<HorseshoeCertificate> horseshoe_f1;
    std::optional<HorseshoeCertificate> horseshoe_f2;
    NestedStructureReport nested;

    PeriodSet periods;
    TypeVerdict type;

    ChaosVerdict ly_sample;
    ChaosVerdict snoha;

    CorollaryFlags corollary;
    std::vector<SelfTestResult> self_test;
};

ReportDocument corollary_report(const std::string& name, const PWLMap& map, const AnalysisConfig& config = {});

/// Machine-readable rendering; field names are stable.
nlohmann::json to_json(const ReportDocument& doc);

/// Human-readable rendering of the JSON document, so both renderings carry
/// identical values.
std::string render_text(const nlohmann::json& doc);

nlohmann::json to_json(const HorseshoeCertificate& cert);
nlohmann::json to_json(const ChaosVerdict& v);
nlohmann::json to_json(const EntropyEstimate& e);
nlohmann::json to_json(const TypeVerdict& t);

/// "%.12g"
std::string format_entropy(double value);

std::string matrix_row(const std::vector<std::uint8_t>& row);

}  // namespace pwdyn
