#include "pwdyn/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pwdyn {

namespace {

Rational rational_field(const nlohmann::json& v) {
    if (v.is_string()) {
        return Rational::parse(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return Rational(v.get<long>());
    }
    return Rational::from_double(v.get<double>());
}

}  // namespace

void apply_config_json(AnalysisConfig& c, const std::string& json_text) {
    const nlohmann::json doc = nlohmann::json::parse(json_text);
    if (!doc.is_object()) {
        throw std::invalid_argument("config must be a JSON object");
    }
    for (const auto& [key, v] : doc.items()) {
        if (key == "max_nodes") {
            c.limits.max_nodes = v.get<std::size_t>();
        } else if (key == "markov_max_steps") {
            c.markov_max_steps = v.get<std::size_t>();
        } else if (key == "perron_tol") {
            c.perron_tol = v.get<double>();
        } else if (key == "lapcount_n") {
            c.lapcount_n = v.get<std::size_t>();
        } else if (key == "horseshoe_max_iterate") {
            c.horseshoe_max_iterate = v.get<std::size_t>();
        } else if (key == "p_max") {
            c.p_max = v.get<std::size_t>();
        } else if (key == "ly_delta") {
            c.ly.delta = v.get<double>();
        } else if (key == "ly_eps_close") {
            c.ly.eps_close = v.get<double>();
        } else if (key == "ly_horizon") {
            c.ly.horizon = v.get<std::size_t>();
        } else if (key == "ly_burn_in") {
            c.ly.burn_in = v.get<std::size_t>();
        } else if (key == "n_pairs") {
            c.sample.n_pairs = v.get<std::size_t>();
        } else if (key == "seed") {
            c.sample.seed = v.get<std::uint64_t>();
        } else if (key == "dense_threshold") {
            c.sample.threshold = v.get<double>();
        } else if (key == "threads") {
            c.sample.threads = v.get<unsigned>();
        } else if (key == "snoha_grid_k") {
            c.snoha_grid_k = v.get<unsigned>();
        } else if (key == "snoha_delta") {
            c.snoha_delta = rational_field(v);
        } else if (key == "snoha_eps") {
            c.snoha_eps = rational_field(v);
        } else if (key == "snoha_horizon") {
            c.snoha_horizon = v.get<std::size_t>();
        } else if (key == "probe_depth") {
            c.probe_depth = v.get<std::size_t>();
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
}

void apply_config_file(AnalysisConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    apply_config_json(config, buf.str());
}

}  // namespace pwdyn
