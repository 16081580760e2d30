#include "pwdyn/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "pwdyn/catalog.hpp"
#include "pwdyn/chaos.hpp"
#include "pwdyn/config.hpp"
#include "pwdyn/horseshoe.hpp"
#include "pwdyn/map_io.hpp"
#include "pwdyn/markov.hpp"
#include "pwdyn/periodic.hpp"
#include "pwdyn/report.hpp"
#include "pwdyn/sharkovskii.hpp"

namespace pwdyn {

namespace {

using nlohmann::json;

struct Globals {
    std::string map_file;
    std::string builtin;
    std::string config_file;
    bool json_out = false;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    std::optional<std::size_t> max_nodes;
};

struct Loaded {
    std::string name;
    PWLMap map;
};

Loaded load(const Globals& g) {
    if (!g.map_file.empty() && !g.builtin.empty()) {
        throw std::invalid_argument("use either --map or --builtin, not both");
    }
    if (!g.map_file.empty()) {
        PWLMap m = load_map_file(g.map_file);
        return {g.map_file, std::move(m)};
    }
    if (!g.builtin.empty()) {
        PWLMap m = catalog_entry(g.builtin).map;
        return {g.builtin, std::move(m)};
    }
    throw std::invalid_argument("this command needs --map <file> or --builtin <name>");
}

std::string interval_text(const ClosedInterval& j) {
    return "[" + j.lo().str() + ", " + j.hi().str() + "]";
}

const char* order_symbol(SharkovskiiOrder o) {
    switch (o) {
        case SharkovskiiOrder::before:
            return "◁";
        case SharkovskiiOrder::after:
            return "▷";
        case SharkovskiiOrder::equal:
            return "=";
    }
    return "?";
}

std::string join_periods(const std::set<std::size_t>& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) {
            out += ", ";
        }
        out += std::to_string(*it);
    }
    return out + "}";
}

void emit(std::ostream& out, const Globals& g, const json& doc, const std::string& text) {
    if (g.json_out) {
        out << doc.dump(2) << '\n';
    } else {
        out << text;
    }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of continuous piecewise-linear interval maps", "pwdyn"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--map", g.map_file, "Map file (one '<x> <y>' node per line)");
    app.add_option("--builtin", g.builtin, "Built-in map name (see 'catalog')");
    app.add_option("--config", g.config_file, "JSON file overriding analysis defaults");
    app.add_flag("--json", g.json_out, "Emit one JSON document");
    app.add_option("--seed", g.seed, "Seed for the pair sampler");
    app.add_option("--tol", g.tol, "Perron root tolerance");
    app.add_option("--max-nodes", g.max_nodes, "Node cap for iterates");

    auto* cat = app.add_subcommand("catalog", "List built-in maps");

    std::string eval_x;
    std::size_t eval_iterate = 1;
    auto* ev = app.add_subcommand("eval", "Evaluate f^n at a rational point");
    ev->add_option("x", eval_x, "Point, e.g. 1/3")->required();
    ev->add_option("--iterate", eval_iterate, "Iterate n")->check(CLI::PositiveNumber);

    std::optional<std::size_t> entropy_n;
    auto* ent = app.add_subcommand("entropy", "Topological entropy (Markov, lap count, horseshoe bound)");
    ent->add_option("--n", entropy_n, "Iterate for the lap-count estimate")->check(CLI::PositiveNumber);

    std::size_t hs_iterate = 1;
    auto* hs = app.add_subcommand("horseshoe", "Search a horseshoe for f^n");
    hs->add_option("--iterate", hs_iterate, "Iterate n")->check(CLI::PositiveNumber);

    std::optional<std::size_t> periods_max;
    auto* per = app.add_subcommand("periods", "Periodic orbits and the period set");
    per->add_option("--max", periods_max, "Largest period")->check(CLI::PositiveNumber);

    std::optional<std::size_t> type_max;
    auto* typ = app.add_subcommand("type", "Sharkovskii type estimate");
    typ->add_option("--max", type_max, "Largest period")->check(CLI::PositiveNumber);

    std::uint64_t cmp_m = 0;
    std::uint64_t cmp_n = 0;
    auto* cmp = app.add_subcommand("compare", "Compare two periods in Sharkovskii's order");
    cmp->add_option("m", cmp_m)->required()->check(CLI::PositiveNumber);
    cmp->add_option("n", cmp_n)->required()->check(CLI::PositiveNumber);

    std::optional<std::size_t> ly_pairs, ly_horizon, ly_burn;
    std::optional<double> ly_delta, ly_eps, ly_threshold;
    std::string ly_csv;
    auto* lys = app.add_subcommand("ly-sample", "Monte Carlo Li-Yorke pair sampler");
    lys->add_option("--pairs", ly_pairs)->check(CLI::PositiveNumber);
    lys->add_option("--horizon", ly_horizon);
    lys->add_option("--burn-in", ly_burn);
    lys->add_option("--delta", ly_delta);
    lys->add_option("--eps", ly_eps);
    lys->add_option("--threshold", ly_threshold);
    lys->add_option("--csv", ly_csv, "Write one row per pair: x,y,max_sep,min_sep,is_ly");

    std::optional<unsigned> sn_k;
    std::optional<std::string> sn_delta, sn_eps;
    std::optional<std::size_t> sn_horizon;
    auto* sn = app.add_subcommand("snoha-grid", "Exact dyadic-interval criterion for generic delta-chaos");
    sn->add_option("--grid-k", sn_k);
    sn->add_option("--delta", sn_delta, "Rational, e.g. 1/4");
    sn->add_option("--eps", sn_eps, "Rational; 0 requires overlap");
    sn->add_option("--horizon", sn_horizon);

    std::vector<std::string> inv_extra;
    auto* inv = app.add_subcommand("invariant-intervals", "Invariant intervals over candidate endpoints");
    inv->add_option("--extra", inv_extra, "Extra candidate endpoints");

    std::optional<std::size_t> probe_depth;
    auto* probe = app.add_subcommand("probe", "Nested invariant intervals with f^2 horseshoes");
    probe->add_option("--depth", probe_depth)->check(CLI::PositiveNumber);

    std::size_t graph_iterate = 1;
    auto* graph = app.add_subcommand("graph", "CSV of the nodes of f^n");
    graph->add_option("--iterate", graph_iterate)->check(CLI::PositiveNumber);

    auto* rep = app.add_subcommand("report", "Full analysis with the dense-chaos consequence checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitError;
    }

    try {
        AnalysisConfig config;
        if (!g.config_file.empty()) {
            apply_config_file(config, g.config_file);
        }
        if (g.seed) {
            config.sample.seed = *g.seed;
        }
        if (g.tol) {
            config.perron_tol = *g.tol;
        }
        if (g.max_nodes) {
            config.limits.max_nodes = *g.max_nodes;
        }

        if (cat->parsed()) {
            json doc = json::array();
            std::string text;
            for (const CatalogEntry& e : catalog()) {
                json nodes = json::array();
                text += e.name + "  (" + e.description + ")\n";
                for (const Node& n : e.map.nodes()) {
                    nodes.push_back(json::array({n.x.str(), n.y.str()}));
                    text += "    " + n.x.str() + " " + n.y.str() + "\n";
                }
                doc.push_back({{"name", e.name}, {"description", e.description}, {"nodes", nodes}});
            }
            emit(out, g, doc, text);
            return kExitOk;
        }

        if (cmp->parsed()) {
            const SharkovskiiOrder o = sharkovskii_compare(cmp_m, cmp_n);
            const std::string text = std::to_string(cmp_m) + " " + order_symbol(o) + " " + std::to_string(cmp_n);
            emit(out, g, {{"m", cmp_m}, {"n", cmp_n}, {"order", to_string(o)}, {"text", text}}, text + "\n");
            return kExitOk;
        }

        const Loaded m = load(g);

        if (ev->parsed()) {
            const Rational x = Rational::parse(eval_x);
            const Rational y = eval(power(m.map, eval_iterate, config.limits), x);
            emit(out, g, {{"x", x.str()}, {"iterate", eval_iterate}, {"value", y.str()}}, y.str() + "\n");
            return kExitOk;
        }

        if (ent->parsed()) {
            const auto mk = entropy_markov(m.map, config.markov_max_steps, config.perron_tol);
            json doc;
            std::string text;
            if (mk) {
                doc["markov"] = to_json(*mk);
                text += "markov:    " + format_entropy(mk->value) + "\n";
                const auto data = markov_partition(m.map, config.markov_max_steps);
                json rows = json::array();
                for (const auto& row : data->matrix) {
                    rows.push_back(matrix_row(row));
                    text += "    " + matrix_row(row) + "\n";
                }
                doc["matrix"] = rows;
            } else {
                doc["markov"] = nullptr;
                text += "markov:    no Markov partition within " + std::to_string(config.markov_max_steps) + " steps\n";
            }
            try {
                const auto lc = entropy_lapcount(m.map, entropy_n.value_or(config.lapcount_n), config.limits);
                doc["lapcount"] = to_json(lc);
                text += "lapcount:  " + format_entropy(lc.value) + " (n = " + std::to_string(lc.iterate_used) +
                        ", laps";
                for (auto c : lc.lap_counts) {
                    text += " " + std::to_string(c);
                }
                text += ")\n";
            } catch (const ResourceError& e) {
                doc["lapcount"] = nullptr;
                doc["lapcount_error"] = e.what();
                text += std::string("lapcount:  ") + e.what() + "\n";
            }
            const auto hb = entropy_lower_bound_horseshoe(m.map, config.horseshoe_max_iterate, config.limits);
            doc["horseshoe_bound"] = to_json(hb);
            text += "horseshoe: >= " + format_entropy(hb.value) + " (" + hb.error_bound_note + ")\n";
            emit(out, g, doc, text);
            return kExitOk;
        }

        if (hs->parsed()) {
            const auto cert = find_horseshoe(m.map, hs_iterate, config.limits);
            if (!cert) {
                emit(out, g, {{"iterate", hs_iterate}, {"found", false}},
                     "not found (f^" + std::to_string(hs_iterate) + ")\n");
                return kExitAbsent;
            }
            json doc = to_json(*cert);
            doc["found"] = true;
            emit(out, g, doc,
                 "horseshoe for f^" + std::to_string(hs_iterate) + ": J = " + interval_text(cert->j) +
                     ", K = " + interval_text(cert->k) + ", f^n(J) = " + interval_text(cert->image_j) +
                     ", f^n(K) = " + interval_text(cert->image_k) + "\n");
            return kExitOk;
        }

        if (per->parsed()) {
            const std::size_t pmax = periods_max.value_or(config.p_max);
            json orbits = json::array();
            std::string text;
            for (std::size_t p = 1; p <= pmax; ++p) {
                PeriodicPoints pts;
                try {
                    pts = periodic_points(m.map, p, config.limits);
                } catch (const ResourceError&) {
                    text += "period " + std::to_string(p) + ": node cap reached\n";
                    break;
                }
                for (const PeriodicOrbit& o : pts.orbits) {
                    json pts_json = json::array();
                    text += "period " + std::to_string(p) + ":";
                    for (const Rational& x : o.points) {
                        pts_json.push_back(x.str());
                        text += " " + x.str();
                    }
                    text += "\n";
                    orbits.push_back({{"period", p}, {"points", pts_json}});
                }
                for (const ClosedInterval& r : pts.ranges) {
                    text += "period dividing " + std::to_string(p) + ": whole range " + interval_text(r) + "\n";
                }
            }
            const PeriodSet ps = period_set(m.map, pmax, config.limits);
            text += "period set: " + join_periods(ps.periods) + "\n";
            emit(out, g,
                 {{"orbits", orbits},
                  {"period_set", ps.periods},
                  {"requested_bound", ps.requested_bound},
                  {"achieved_bound", ps.achieved_bound}},
                 text);
            return kExitOk;
        }

        if (typ->parsed()) {
            const TypeVerdict t = sharkovskii_type_estimate(m.map, type_max.value_or(config.p_max), config.limits);
            std::string text = t.str() + " (periods " + join_periods(t.detected_periods) + " up to " +
                               std::to_string(t.search_bound) + ")\n";
            if (t.kind == TypeKind::at_most_powers_of_two) {
                text += "only powers of two found; type 2^k and type 2^inf cannot be told apart at a finite bound\n";
            }
            emit(out, g, to_json(t), text);
            return kExitOk;
        }

        if (lys->parsed()) {
            LYParams params = config.ly;
            params.delta = ly_delta.value_or(params.delta);
            params.eps_close = ly_eps.value_or(params.eps_close);
            params.horizon = ly_horizon.value_or(params.horizon);
            params.burn_in = ly_burn.value_or(params.burn_in);
            SampleOptions opts = config.sample;
            opts.n_pairs = ly_pairs.value_or(opts.n_pairs);
            opts.threshold = ly_threshold.value_or(opts.threshold);
            std::vector<PairRecord> records;
            const ChaosVerdict v = ly_density_sample(m.map, params, opts, ly_csv.empty() ? nullptr : &records);
            if (!ly_csv.empty()) {
                std::ofstream csv(ly_csv);
                if (!csv) {
                    throw std::runtime_error("cannot write '" + ly_csv + "'");
                }
                csv << "x,y,max_sep,min_sep,is_ly\n";
                csv.precision(17);
                for (const PairRecord& r : records) {
                    csv << r.x << ',' << r.y << ',' << r.max_sep << ',' << r.min_sep << ',' << (r.is_ly ? 1 : 0)
                        << '\n';
                }
            }
            emit(out, g, to_json(v),
                 "ly_fraction: " + format_entropy(v.ly_fraction) + " over " + std::to_string(v.pairs_tested) +
                     " pairs\nclassification: " + to_string(v.classification) + "\ncaveat: " + v.caveat + "\n");
            return v.classification == Classification::dense_chaos_evidence ? kExitOk : kExitAbsent;
        }

        if (sn->parsed()) {
            const Rational delta = sn_delta ? Rational::parse(*sn_delta) : config.snoha_delta;
            const Rational eps = sn_eps ? Rational::parse(*sn_eps) : config.snoha_eps;
            const ChaosVerdict v = snoha_interval_criterion(m.map, sn_k.value_or(config.snoha_grid_k), delta, eps,
                                                            sn_horizon.value_or(config.snoha_horizon));
            emit(out, g, to_json(v),
                 "fraction of cell pairs passing: " + format_entropy(v.ly_fraction) + " (" +
                     std::to_string(v.pairs_tested) + " pairs)" +
                     "\nclassification: " + to_string(v.classification) + "\ncaveat: " + v.caveat + "\n");
            return v.classification == Classification::dense_chaos_evidence ? kExitOk : kExitAbsent;
        }

        if (inv->parsed()) {
            std::vector<Rational> extra;
            for (const auto& s : inv_extra) {
                extra.push_back(Rational::parse(s));
            }
            json doc = json::array();
            std::string text;
            for (const ClosedInterval& j : invariant_intervals(m.map, extra)) {
                doc.push_back(json::array({j.lo().str(), j.hi().str()}));
                text += interval_text(j) + "\n";
            }
            emit(out, g, doc, text);
            return kExitOk;
        }

        if (probe->parsed()) {
            const NestedStructureReport r =
                nested_structure_probe(m.map, probe_depth.value_or(config.probe_depth), config.limits);
            json levels = json::array();
            std::string text;
            for (const NestedLevel& l : r.levels) {
                levels.push_back({{"interval", json::array({l.interval.lo().str(), l.interval.hi().str()})},
                                  {"f2_certificate", l.certificate ? to_json(*l.certificate) : json(nullptr)}});
                text += interval_text(l.interval) + ": " +
                        (l.certificate ? "f^2 horseshoe J = " + interval_text(l.certificate->j) +
                                             ", K = " + interval_text(l.certificate->k)
                                       : std::string("no f^2 horseshoe found")) +
                        "\n";
            }
            text += r.structure_found() ? "structure found\n" : "structure absent\n";
            emit(out, g, {{"levels", levels}, {"structure_found", r.structure_found()}}, text);
            return r.structure_found() ? kExitOk : kExitAbsent;
        }

        if (graph->parsed()) {
            const PWLMap h = power(m.map, graph_iterate, config.limits);
            json doc = json::array();
            std::string text = "x,y,x_exact,y_exact\n";
            for (const Node& n : h.nodes()) {
                doc.push_back(json::array({n.x.str(), n.y.str()}));
                text += format_entropy(n.x.to_double()) + "," + format_entropy(n.y.to_double()) + "," + n.x.str() +
                        "," + n.y.str() + "\n";
            }
            emit(out, g, doc, text);
            return kExitOk;
        }

        if (rep->parsed()) {
            const ReportDocument doc = corollary_report(m.name, m.map, config);
            const json j = to_json(doc);
            emit(out, g, j, render_text(j));
            const bool self_ok = std::all_of(doc.self_test.begin(), doc.self_test.end(),
                                             [](const SelfTestResult& r) { return r.passed; });
            if (!self_ok || !doc.corollary.all_green) {
                err << "report: self-test failure or corollary violation\n";
                return kExitError;
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace pwdyn
