#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "osa/conditions.hpp"
#include "osa/dp.hpp"
#include "osa/errors.hpp"
#include "osa/json_io.hpp"
#include "osa/model.hpp"
#include "osa/policy.hpp"
#include "osa/sim.hpp"
#include "osa/sweep.hpp"

namespace {

using nlohmann::json;

// "infinite"/"inf" -> nullopt, otherwise a positive step count.
std::optional<int> parse_horizon(const std::string& s) {
    if (s == "infinite" || s == "inf") return std::nullopt;
    size_t pos = 0;
    int t = 0;
    try {
        t = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--horizon", "expected a positive integer or 'infinite'");
    }
    if (pos != s.size() || t < 1) {
        throw CLI::ValidationError("--horizon", "expected a positive integer or 'infinite'");
    }
    return t;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw osa::IoError("cannot open for writing: " + out_path);
    f << text;
    f.flush();
    if (!f) throw osa::IoError("write failed: " + out_path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

osa::PolicySpec make_policy(const std::string& name, int k, int m,
                            const std::vector<int>& first_action_1based,
                            std::optional<std::uint64_t> seed) {
    if (name == "myopic") return osa::PolicySpec::myopic(k, m);
    if (name == "fixed") {
        if (first_action_1based.empty()) {
            throw CLI::ValidationError("--policy", "fixed needs --first-action c1,c2,...");
        }
        std::vector<int> zero;
        zero.reserve(first_action_1based.size());
        for (int c : first_action_1based) zero.push_back(c - 1);
        return osa::PolicySpec::fixed_first(std::move(zero), k, m);
    }
    if (name == "random") {
        if (!seed) throw CLI::ValidationError("--policy", "random needs --seed");
        return osa::PolicySpec::random(*seed, k, m);
    }
    if (name == "optimal") return osa::PolicySpec::optimal(k, m);
    throw CLI::ValidationError("--policy", "unknown policy: " + name);
}

std::string format_action_1based(const osa::Action& a) {
    std::string s = "{";
    for (size_t i = 0; i < a.channels.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.channels[i] + 1);
    }
    return s + "}";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(k,m) multichannel opportunistic-access toolkit"};
    app.require_subcommand(1);

    // Shared option storage; each subcommand registers the flags it uses.
    double p11 = 0.0, p01 = 0.0;
    int n = 0, k = 1, m = 1;
    double beta = 1.0;
    std::string horizon_str = "infinite";
    std::vector<double> belief_values;
    std::string policy_name = "myopic";
    std::vector<int> first_action;
    std::optional<std::uint64_t> seed_opt;
    std::uint64_t seed_raw = 0;
    std::string out_path;
    std::string cx_format = "text";
    std::string sweep_format = "csv";
    double epsilon = 1e-7;
    int depth = 6;
    bool override_guard = false;
    int bounds_T = 0;

    auto add_model = [&](CLI::App* cmd) {
        cmd->add_option("--p11", p11, "P(good stays good)")->required()
            ->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--p01", p01, "P(bad turns good)")->required()
            ->check(CLI::Range(0.0, 1.0));
    };
    auto add_km = [&](CLI::App* cmd) {
        cmd->add_option("--k", k, "channels sensed per step")->required();
        cmd->add_option("--m", m, "rewarded channel cap")->required();
    };
    auto add_belief = [&](CLI::App* cmd) {
        cmd->add_option("--ordered-belief", belief_values,
                        "belief vector w1,w2,... (one entry per channel)")
            ->required()
            ->delimiter(',');
    };
    auto add_policy = [&](CLI::App* cmd) {
        cmd->add_option("--policy", policy_name, "myopic|fixed|random|optimal")
            ->capture_default_str();
        cmd->add_option("--first-action", first_action,
                        "1-based channels forced at t=1 (fixed policy)")
            ->delimiter(',');
        cmd->add_option("--seed", seed_raw, "RNG seed")->each([&](const std::string&) {
            seed_opt = seed_raw;
        });
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output here instead of stdout");
    };

    // check: sufficient-condition report for one parameter set.
    CLI::App* check = app.add_subcommand(
        "check", "evaluate the myopic-optimality condition at one parameter set");
    add_model(check);
    add_km(check);
    check->add_option("--n", n, "number of channels")->required();
    check->add_option("--beta", beta, "discount factor (finite horizon)");
    check->add_option("--horizon", horizon_str,
                      "'infinite' (default) or any integer for the finite-horizon test")
        ->capture_default_str();
    check->add_option("--bounds", bounds_T,
                      "also report the per-step sensitivity bounds up to this horizon");
    add_out(check);

    // value: exact policy evaluation / exhaustive optimum.
    CLI::App* value = app.add_subcommand(
        "value", "exact expected discounted reward of a policy (or the optimum)");
    add_model(value);
    add_km(value);
    add_belief(value);
    add_policy(value);
    value->add_option("--horizon", horizon_str, "steps, or 'infinite'")->required();
    value->add_option("--beta", beta, "discount factor")->capture_default_str();
    value->add_option("--epsilon", epsilon, "truncation tolerance (infinite horizon)")
        ->capture_default_str();
    value->add_flag("--override-scale-guard", override_guard,
                    "run exhaustive optimization past the desk-scale guard");
    add_out(value);

    // counterexample: the hard-coded instance where greedy loses.
    CLI::App* cx = app.add_subcommand(
        "counterexample", "reproduce the worked instance where the myopic policy is beaten");
    cx->add_option("--format", cx_format, "json for the machine-readable report")
        ->capture_default_str();
    add_out(cx);

    // audit: one-step deviation search.
    CLI::App* audit = app.add_subcommand(
        "audit", "search lattice beliefs for a profitable one-step deviation from myopic");
    add_model(audit);
    add_km(audit);
    audit->add_option("--n", n, "number of channels")->required();
    audit->add_option("--beta", beta, "discount factor")->required();
    audit->add_option("--horizon", horizon_str, "'infinite' (default) or an integer T")
        ->capture_default_str();
    audit->add_option("--epsilon", epsilon, "truncation tolerance (infinite horizon)")
        ->capture_default_str();
    audit->add_option("--depth", depth, "belief-lattice generation depth")
        ->capture_default_str();
    add_out(audit);

    // simulate: Monte Carlo rollout.
    CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo rollout of a policy");
    add_model(sim);
    add_km(sim);
    add_belief(sim);
    add_policy(sim);
    long long replications = 10000;
    int burn_in = -1;
    std::vector<int> fixed_states;
    bool keep_reps = false;
    sim->add_option("--horizon", horizon_str, "steps per replication")->required();
    sim->add_option("--beta", beta, "discount factor; exactly 1 = average-reward mode")
        ->capture_default_str();
    sim->add_option("--replications", replications, "independent replications")
        ->capture_default_str();
    sim->add_option("--burn-in", burn_in, "average mode: steps dropped (-1 = horizon/10)");
    sim->add_option("--fixed-states", fixed_states,
                    "start from these true states (0/1 per channel) instead of sampling")
        ->delimiter(',');
    sim->add_flag("--keep-per-replication", keep_reps, "include per-replication values");
    add_out(sim);

    // sweep: (p01,p11) region scan.
    CLI::App* sweep = app.add_subcommand(
        "sweep", "scan the (p01,p11) grid and report where the condition holds");
    add_km(sweep);
    std::string regime = "both";
    double grid_step = 0.02;
    std::string svg_out;
    sweep->add_option("--n", n, "number of channels")->required();
    sweep->add_option("--regime", regime, "positive|negative|both")->capture_default_str();
    sweep->add_option("--grid-step", grid_step, "grid spacing in (0, 0.25]")
        ->capture_default_str();
    sweep->add_option("--horizon", horizon_str, "'infinite' (default) or any integer")
        ->capture_default_str();
    sweep->add_option("--beta", beta, "discount factor (finite-horizon sweep)");
    sweep->add_option("--format", sweep_format, "csv|json|svg for --out/stdout")
        ->capture_default_str();
    sweep->add_option("--svg-out", svg_out, "also write the scatter plot here");
    add_out(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check)) {
            osa::ChannelModel model(p11, p01);
            auto T = parse_horizon(horizon_str);
            osa::ConditionReport report =
                T ? osa::finite_condition(model, n, k, m, beta)
                  : osa::infinite_condition(model, n, k, m);
            json j = osa::to_json(report);
            if (bounds_T > 0) j["bounds"] = osa::to_json(osa::delta_bounds(model, k, m, beta, bounds_T));
            write_output(dump(j), out_path);
        } else if (app.got_subcommand(value)) {
            osa::ChannelModel model(p11, p01);
            osa::BeliefState belief(belief_values);
            osa::PolicySpec spec = make_policy(policy_name, k, m, first_action, seed_opt);
            auto T = parse_horizon(horizon_str);
            osa::ValueResult result;
            if (!T) {
                if (spec.kind == osa::PolicyKind::ExhaustiveOptimal) {
                    throw std::invalid_argument(
                        "exhaustive optimization needs a finite --horizon");
                }
                result = osa::infinite_value_truncated(model, belief, spec, beta, epsilon);
            } else if (spec.kind == osa::PolicyKind::ExhaustiveOptimal) {
                result = osa::optimal_value(model, belief, k, m,
                                            osa::HorizonSpec::finite_horizon(*T, beta),
                                            override_guard);
            } else {
                result = osa::evaluate_policy(model, belief, spec,
                                              osa::HorizonSpec::finite_horizon(*T, beta));
            }
            write_output(dump(osa::to_json(result)), out_path);
        } else if (app.got_subcommand(cx)) {
            osa::CounterexampleReport report = osa::run_counterexample();
            if (cx_format == "json") {
                write_output(dump(osa::to_json(report)), out_path);
            } else {
                char buf[512];
                std::string text;
                std::snprintf(buf, sizeof buf, "W_myopic    = %.6f\n", report.w_myopic);
                text += buf;
                std::snprintf(buf, sizeof buf, "W_deviation = %.6f\n", report.w_deviation);
                text += buf;
                std::snprintf(buf, sizeof buf, "difference  = %.6f\n", report.gap);
                text += buf;
                text += "verdict: myopic ";
                text += report.myopic_optimal ? "optimal" : "NOT optimal";
                text += "\noptimal first action(s):";
                for (const auto& a : report.optimal_first_actions) {
                    text += " " + format_action_1based(a);
                }
                text += "\n";
                write_output(text, out_path);
            }
        } else if (app.got_subcommand(audit)) {
            osa::ChannelModel model(p11, p01);
            auto T = parse_horizon(horizon_str);
            osa::DeviationReport report;
            if (T) {
                report = osa::finite_deviation_audit(model, k, m, beta, *T,
                                                     osa::belief_lattice(model, n, depth));
            } else {
                report = osa::deviation_audit(model, n, k, m, beta, epsilon, depth);
            }
            write_output(dump(osa::to_json(report)), out_path);
        } else if (app.got_subcommand(sim)) {
            osa::ChannelModel model(p11, p01);
            osa::BeliefState belief(belief_values);
            osa::PolicySpec spec = make_policy(policy_name, k, m, first_action, seed_opt);
            auto T = parse_horizon(horizon_str);
            if (!T) throw std::invalid_argument("simulate needs a finite --horizon");
            osa::SimConfig config;
            config.horizon = *T;
            config.replications = replications;
            config.beta = beta;
            config.seed = seed_opt.value_or(0);
            config.burn_in = burn_in;
            config.keep_per_replication = keep_reps;
            if (!fixed_states.empty()) {
                config.init_mode = osa::SimConfig::InitMode::FixedStates;
                config.fixed_states = fixed_states;
            }
            write_output(dump(osa::to_json(osa::simulate(model, belief, spec, config))),
                         out_path);
        } else if (app.got_subcommand(sweep)) {
            osa::SweepConfig config;
            config.n = n;
            config.k = k;
            config.m = m;
            config.grid_step = grid_step;
            if (regime == "positive") config.regime = osa::SweepConfig::RegimeSel::Positive;
            else if (regime == "negative") config.regime = osa::SweepConfig::RegimeSel::Negative;
            else if (regime == "both") config.regime = osa::SweepConfig::RegimeSel::Both;
            else throw std::invalid_argument("unknown regime: " + regime);
            auto T = parse_horizon(horizon_str);
            config.finite = T.has_value();
            config.beta = beta;
            std::vector<osa::SweepRow> rows = osa::region_sweep(config);
            std::string text;
            if (sweep_format == "csv") {
                text = osa::sweep_to_csv(rows);
            } else if (sweep_format == "svg") {
                text = osa::sweep_to_svg(rows, config);
            } else if (sweep_format == "json") {
                json arr = json::array();
                for (const auto& r : rows) arr.push_back(osa::to_json(r));
                text = dump(arr);
            } else {
                throw std::invalid_argument("unknown format: " + sweep_format);
            }
            write_output(text, out_path);
            if (!svg_out.empty()) write_output(osa::sweep_to_svg(rows, config), svg_out);
        }
    } catch (const osa::ScaleGuardError& e) {
        std::cerr << "scale guard: " << e.what() << "\n";
        return 3;
    } catch (const osa::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
