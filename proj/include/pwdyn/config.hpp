#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "pwdyn/chaos.hpp"
#include "pwdyn/pwl_map.hpp"
#include "pwdyn/rational.hpp"

namespace pwdyn {

/// Every tunable default in one place. The CLI starts from these values,
/// applies an optional JSON config file, then command-line flags.
struct AnalysisConfig {
    CompositionLimits limits;
    std::size_t markov_max_steps = 512;
    double perron_tol = 1e-12;
    std::size_t lapcount_n = 16;
    std::size_t horseshoe_max_iterate = 4;
    std::size_t p_max = 8;
    LYParams ly;
    SampleOptions sample;
    unsigned snoha_grid_k = 3;
    Rational snoha_delta{1, 4};
    Rational snoha_eps{0};
    std::size_t snoha_horizon = 20;
    std::size_t probe_depth = 3;
};

/// Overrides fields present in a JSON object; unknown keys are rejected.
/// Keys: max_nodes, markov_max_steps, perron_tol, lapcount_n,
/// horseshoe_max_iterate, p_max, ly_delta, ly_eps_close, ly_horizon,
/// ly_burn_in, n_pairs, seed, dense_threshold, threads, snoha_grid_k,
/// snoha_delta, snoha_eps, snoha_horizon, probe_depth.
void apply_config_json(AnalysisConfig& config, const std::string& json_text);

void apply_config_file(AnalysisConfig& config, const std::string& path);

}  // namespace pwdyn
