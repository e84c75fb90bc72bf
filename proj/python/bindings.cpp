// Python bindings for the multichannel opportunistic-access library.  The
// Python API uses 0-based channel indices throughout (the CLI and JSON layers
// are the only 1-based surfaces).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "osa/conditions.hpp"
#include "osa/dp.hpp"
#include "osa/errors.hpp"
#include "osa/model.hpp"
#include "osa/policy.hpp"
#include "osa/reward.hpp"
#include "osa/sim.hpp"
#include "osa/sweep.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_osa, mod) {
    mod.doc() = "Belief-state planning toolkit for (k,m) multichannel "
                "opportunistic access over two-state Markov channels.  "
                "Channel indices are 0-based in this API.";

    py::register_exception<osa::ScaleGuardError>(mod, "ScaleGuardError");

    py::class_<osa::ChannelModel>(mod, "ChannelModel",
                                  "Two-state Markov channel: p11 = P(good stays good), "
                                  "p01 = P(bad turns good).")
        .def(py::init<double, double>(), py::arg("p11"), py::arg("p01"))
        .def_readonly("p11", &osa::ChannelModel::p11)
        .def_readonly("p01", &osa::ChannelModel::p01)
        .def("positive", &osa::ChannelModel::positive)
        .def("delta", &osa::ChannelModel::delta)
        .def("belief_lo", &osa::ChannelModel::belief_lo)
        .def("belief_hi", &osa::ChannelModel::belief_hi)
        .def("stationary", &osa::ChannelModel::stationary)
        .def("__repr__", [](const osa::ChannelModel& m) {
            std::ostringstream os;
            os << "ChannelModel(p11=" << m.p11 << ", p01=" << m.p01 << ")";
            return os.str();
        });

    mod.def("tau", &osa::tau, py::arg("model"), py::arg("omega"),
            "One-step belief propagation for an unobserved channel.");

    py::class_<osa::BeliefState>(mod, "BeliefState",
                                 "Per-channel probabilities of being good right now.")
        .def(py::init<std::vector<double>>(), py::arg("omegas"))
        .def_readwrite("omegas", &osa::BeliefState::omegas)
        .def("n", &osa::BeliefState::n)
        .def("in_box", &osa::BeliefState::in_box, py::arg("model"))
        .def("__repr__", [](const osa::BeliefState& w) {
            std::ostringstream os;
            os << "BeliefState([";
            for (std::size_t i = 0; i < w.omegas.size(); ++i) {
                os << (i ? ", " : "") << w.omegas[i];
            }
            os << "])";
            return os.str();
        });

    py::class_<osa::Action>(mod, "Action", "A size-k sensing choice, 0-based indices.")
        .def(py::init<std::vector<int>, int>(), py::arg("channels"), py::arg("n"))
        .def_readonly("channels", &osa::Action::channels)
        .def("k", &osa::Action::k)
        .def("__repr__", [](const osa::Action& a) {
            std::ostringstream os;
            os << "Action([";
            for (std::size_t i = 0; i < a.channels.size(); ++i) {
                os << (i ? ", " : "") << a.channels[i];
            }
            os << "])";
            return os.str();
        });

    mod.def("transition_belief", &osa::transition_belief, py::arg("model"),
            py::arg("belief"), py::arg("action"), py::arg("outcome"),
            "Posterior belief after sensing: good -> p11, bad -> p01, "
            "unsensed -> tau(omega).");
    mod.def("outcome_probability", &osa::outcome_probability, py::arg("belief"),
            py::arg("action"), py::arg("outcome"));

    mod.def("success_count_distribution", &osa::success_count_distribution,
            py::arg("probs"),
            "Poisson-binomial pmf over the number of good channels.");
    mod.def("expected_reward",
            py::overload_cast<const osa::BeliefState&, const osa::Action&, int>(
                &osa::expected_reward),
            py::arg("belief"), py::arg("action"), py::arg("m"),
            "E[min(L, m)] where L counts good channels among the sensed set.");
    mod.def("reward_gap", &osa::reward_gap, py::arg("omega_rest"), py::arg("m"));

    py::class_<osa::RewardGapBounds>(mod, "RewardGapBounds")
        .def_readonly("r_upper", &osa::RewardGapBounds::r_upper)
        .def_readonly("r_lower", &osa::RewardGapBounds::r_lower);
    mod.def("reward_gap_bounds", &osa::reward_gap_bounds, py::arg("model"),
            py::arg("k"), py::arg("m"));
    mod.def("reward_gap_bounds_grid", &osa::reward_gap_bounds_grid, py::arg("model"),
            py::arg("k"), py::arg("m"), py::arg("points_per_axis") = 21);

    mod.def("myopic_action", &osa::myopic_action, py::arg("belief"), py::arg("k"),
            "The k channels with the largest beliefs; ties to the lowest index.");

    py::class_<osa::PolicySpec>(mod, "PolicySpec")
        .def_static("myopic", &osa::PolicySpec::myopic, py::arg("k"), py::arg("m"))
        .def_static("fixed_first", &osa::PolicySpec::fixed_first, py::arg("action"),
                    py::arg("k"), py::arg("m"),
                    "Force a 0-based first action, then play myopically.")
        .def_static("random", &osa::PolicySpec::random, py::arg("seed"), py::arg("k"),
                    py::arg("m"))
        .def_static("optimal", &osa::PolicySpec::optimal, py::arg("k"), py::arg("m"))
        .def_readonly("k", &osa::PolicySpec::k)
        .def_readonly("m", &osa::PolicySpec::m);

    mod.def("policy_action", &osa::policy_action, py::arg("spec"), py::arg("belief"),
            py::arg("t"), "Action for 1-based step t under a stepwise policy.");

    py::class_<osa::HorizonSpec>(mod, "HorizonSpec")
        .def_static("finite", &osa::HorizonSpec::finite_horizon, py::arg("T"),
                    py::arg("beta"))
        .def_static("infinite", &osa::HorizonSpec::infinite_horizon, py::arg("beta"),
                    py::arg("epsilon"))
        .def_readonly("T", &osa::HorizonSpec::T)
        .def_readonly("beta", &osa::HorizonSpec::beta);

    py::class_<osa::ValueResult>(mod, "ValueResult")
        .def_readonly("value", &osa::ValueResult::value)
        .def_readonly("error_bound", &osa::ValueResult::error_bound)
        .def_readonly("first_actions", &osa::ValueResult::first_actions);

    mod.def("evaluate_policy", &osa::evaluate_policy, py::arg("model"),
            py::arg("belief"), py::arg("spec"), py::arg("horizon"),
            "Exact expected discounted reward of a stepwise policy (finite horizon).");
    mod.def("optimal_value", &osa::optimal_value, py::arg("model"), py::arg("belief"),
            py::arg("k"), py::arg("m"), py::arg("horizon"),
            py::arg("override_scale_guard") = false,
            "Exhaustive optimum; raises ScaleGuardError beyond desk scale unless "
            "overridden.");
    mod.def("infinite_value_truncated", &osa::infinite_value_truncated, py::arg("model"),
            py::arg("belief"), py::arg("spec"), py::arg("beta"), py::arg("epsilon"),
            "Discounted infinite-horizon value, truncated once the tail bound "
            "drops below epsilon.");
    mod.def("w_value", &osa::w_value, py::arg("model"), py::arg("ordered"), py::arg("k"),
            py::arg("m"), py::arg("beta"), py::arg("T"),
            "Ordered-list recursion: sense the first k slots, re-rank, repeat.");

    py::enum_<osa::Regime>(mod, "Regime")
        .value("Positive", osa::Regime::Positive)
        .value("Negative", osa::Regime::Negative);

    py::class_<osa::ConditionReport>(mod, "ConditionReport")
        .def_readonly("regime", &osa::ConditionReport::regime)
        .def_readonly("finite", &osa::ConditionReport::finite)
        .def_readonly("r_upper", &osa::ConditionReport::r_upper)
        .def_readonly("r_lower", &osa::ConditionReport::r_lower)
        .def_readonly("lhs", &osa::ConditionReport::lhs)
        .def_readonly("threshold", &osa::ConditionReport::threshold)
        .def_readonly("satisfied", &osa::ConditionReport::satisfied)
        .def_readonly("unconditional", &osa::ConditionReport::unconditional)
        .def_readonly("table_variant_satisfied",
                      &osa::ConditionReport::table_variant_satisfied)
        .def_readonly("belief_domain_note", &osa::ConditionReport::belief_domain_note);

    mod.def("finite_condition", &osa::finite_condition, py::arg("model"), py::arg("n"),
            py::arg("k"), py::arg("m"), py::arg("beta"),
            "Sufficient condition for the greedy policy over a finite horizon.");
    mod.def("infinite_condition", &osa::infinite_condition, py::arg("model"),
            py::arg("n"), py::arg("k"), py::arg("m"),
            "Discount-free sufficient condition, infinite horizon.");

    py::class_<osa::BoundSequence>(mod, "BoundSequence")
        .def_readonly("T", &osa::BoundSequence::T)
        .def_readonly("upper", &osa::BoundSequence::upper)
        .def_readonly("lower", &osa::BoundSequence::lower)
        .def_readonly("eta", &osa::BoundSequence::eta)
        .def_readonly("delta_inf", &osa::BoundSequence::delta_inf)
        .def_readonly("unbounded", &osa::BoundSequence::unbounded);
    mod.def("delta_bounds", &osa::delta_bounds, py::arg("model"), py::arg("k"),
            py::arg("m"), py::arg("beta"), py::arg("T"),
            "Per-step bounds on the value's sensitivity to one belief coordinate.");

    mod.def("belief_lattice", &osa::belief_lattice, py::arg("model"), py::arg("n"),
            py::arg("depth"));

    py::class_<osa::DeviationReport>(mod, "DeviationReport")
        .def_readonly("profitable_found", &osa::DeviationReport::profitable_found)
        .def_readonly("witness_belief", &osa::DeviationReport::witness_belief)
        .def_readonly("witness_action", &osa::DeviationReport::witness_action)
        .def_readonly("gain", &osa::DeviationReport::gain)
        .def_readonly("beliefs_audited", &osa::DeviationReport::beliefs_audited);

    mod.def("deviation_audit", &osa::deviation_audit, py::arg("model"), py::arg("n"),
            py::arg("k"), py::arg("m"), py::arg("beta"), py::arg("epsilon"),
            py::arg("belief_grid_depth"),
            "Search lattice beliefs for a profitable one-step deviation from the "
            "greedy policy (infinite horizon, truncation-aware threshold).");
    mod.def("finite_deviation_audit", &osa::finite_deviation_audit, py::arg("model"),
            py::arg("k"), py::arg("m"), py::arg("beta"), py::arg("T"),
            py::arg("beliefs"));

    py::class_<osa::SimConfig> sim_config(mod, "SimConfig");
    py::enum_<osa::SimConfig::InitMode>(sim_config, "InitMode")
        .value("SampleFromBelief", osa::SimConfig::InitMode::SampleFromBelief)
        .value("FixedStates", osa::SimConfig::InitMode::FixedStates);
    sim_config.def(py::init<>())
        .def_readwrite("horizon", &osa::SimConfig::horizon)
        .def_readwrite("replications", &osa::SimConfig::replications)
        .def_readwrite("beta", &osa::SimConfig::beta)
        .def_readwrite("seed", &osa::SimConfig::seed)
        .def_readwrite("init_mode", &osa::SimConfig::init_mode)
        .def_readwrite("fixed_states", &osa::SimConfig::fixed_states)
        .def_readwrite("burn_in", &osa::SimConfig::burn_in)
        .def_readwrite("keep_per_replication", &osa::SimConfig::keep_per_replication);

    py::class_<osa::SimResult>(mod, "SimResult")
        .def_readonly("mean", &osa::SimResult::mean)
        .def_readonly("std_error", &osa::SimResult::std_error)
        .def_readonly("ci95", &osa::SimResult::ci95)
        .def_readonly("per_replication", &osa::SimResult::per_replication);

    mod.def("simulate", &osa::simulate, py::arg("model"), py::arg("belief"),
            py::arg("spec"), py::arg("config"),
            "Monte Carlo rollout; replication r is seeded from (seed, r), so "
            "results are bit-reproducible.");

    py::class_<osa::SweepConfig> sweep_config(mod, "SweepConfig");
    py::enum_<osa::SweepConfig::RegimeSel>(sweep_config, "RegimeSel")
        .value("Positive", osa::SweepConfig::RegimeSel::Positive)
        .value("Negative", osa::SweepConfig::RegimeSel::Negative)
        .value("Both", osa::SweepConfig::RegimeSel::Both);
    sweep_config.def(py::init<>())
        .def_readwrite("n", &osa::SweepConfig::n)
        .def_readwrite("k", &osa::SweepConfig::k)
        .def_readwrite("m", &osa::SweepConfig::m)
        .def_readwrite("regime", &osa::SweepConfig::regime)
        .def_readwrite("grid_step", &osa::SweepConfig::grid_step)
        .def_readwrite("finite", &osa::SweepConfig::finite)
        .def_readwrite("beta", &osa::SweepConfig::beta);

    py::class_<osa::SweepRow>(mod, "SweepRow")
        .def_readonly("p01", &osa::SweepRow::p01)
        .def_readonly("p11", &osa::SweepRow::p11)
        .def_readonly("r_upper", &osa::SweepRow::r_upper)
        .def_readonly("r_lower", &osa::SweepRow::r_lower)
        .def_readonly("lhs", &osa::SweepRow::lhs)
        .def_readonly("threshold", &osa::SweepRow::threshold)
        .def_readonly("satisfied", &osa::SweepRow::satisfied)
        .def_readonly("unconditional", &osa::SweepRow::unconditional);

    mod.def("region_sweep", &osa::region_sweep, py::arg("config"));
    mod.def("sweep_to_csv", &osa::sweep_to_csv, py::arg("rows"));
    mod.def("sweep_from_csv", &osa::sweep_from_csv, py::arg("csv"));
    mod.def("sweep_to_svg", &osa::sweep_to_svg, py::arg("rows"), py::arg("config"));

    py::class_<osa::CounterexampleReport>(mod, "CounterexampleReport")
        .def_readonly("w_myopic", &osa::CounterexampleReport::w_myopic)
        .def_readonly("w_deviation", &osa::CounterexampleReport::w_deviation)
        .def_readonly("gap", &osa::CounterexampleReport::gap)
        .def_readonly("myopic_optimal", &osa::CounterexampleReport::myopic_optimal)
        .def_readonly("optimal_first_actions",
                      &osa::CounterexampleReport::optimal_first_actions);
    mod.def("run_counterexample", &osa::run_counterexample,
            "The bundled worked instance where the greedy policy is strictly "
            "suboptimal.");

    mod.def("thread_budget", &osa::thread_budget);
}
