#include "osa/json_io.hpp"

#include <stdexcept>

namespace osa {

using nlohmann::json;

namespace {

json action_to_one_based(const Action& action) {
    json arr = json::array();
    for (int c : action.channels) arr.push_back(c + 1);
    return arr;
}

std::vector<int> one_based_to_zero(const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("expected an array of channel indices");
    std::vector<int> idx;
    idx.reserve(arr.size());
    for (const auto& v : arr) idx.push_back(v.get<int>() - 1);
    return idx;
}

}  // namespace

json to_json(const ChannelModel& model) {
    return json{{"p11", model.p11}, {"p01", model.p01}};
}

ChannelModel channel_model_from_json(const json& j) {
    return ChannelModel(j.at("p11").get<double>(), j.at("p01").get<double>());
}

json to_json(const BeliefState& belief) {
    return json{{"omegas", belief.omegas}};
}

BeliefState belief_from_json(const json& j) {
    return BeliefState(j.at("omegas").get<std::vector<double>>());
}

json to_json(const Action& action) { return action_to_one_based(action); }

Action action_from_json(const json& j, int n) {
    return Action(one_based_to_zero(j), n);
}

json to_json(const PolicySpec& spec) {
    json j;
    switch (spec.kind) {
        case PolicyKind::Myopic: j["kind"] = "myopic"; break;
        case PolicyKind::FixedFirstThenMyopic: j["kind"] = "fixed"; break;
        case PolicyKind::Random: j["kind"] = "random"; break;
        case PolicyKind::ExhaustiveOptimal: j["kind"] = "optimal"; break;
    }
    j["k"] = spec.k;
    j["m"] = spec.m;
    if (spec.first_action) {
        json arr = json::array();
        for (int c : *spec.first_action) arr.push_back(c + 1);
        j["first_action"] = arr;
    }
    if (spec.seed) j["seed"] = *spec.seed;
    return j;
}

PolicySpec policy_spec_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const int k = j.at("k").get<int>();
    const int m = j.at("m").get<int>();
    if (kind == "myopic") return PolicySpec::myopic(k, m);
    if (kind == "fixed") {
        return PolicySpec::fixed_first(one_based_to_zero(j.at("first_action")), k, m);
    }
    if (kind == "random") {
        return PolicySpec::random(j.at("seed").get<std::uint64_t>(), k, m);
    }
    if (kind == "optimal") return PolicySpec::optimal(k, m);
    throw std::invalid_argument("unknown policy kind: " + kind);
}

json to_json(const ValueResult& result) {
    json j{{"value", result.value}, {"error_bound", result.error_bound}};
    if (!result.first_actions.empty()) {
        json arr = json::array();
        for (const auto& a : result.first_actions) arr.push_back(action_to_one_based(a));
        j["first_actions"] = arr;
    }
    return j;
}

json to_json(const DeviationReport& report) {
    json j{{"profitable_found", report.profitable_found},
           {"gain", report.gain},
           {"beliefs_audited", report.beliefs_audited}};
    if (report.witness_belief) j["witness_belief"] = to_json(*report.witness_belief);
    if (report.witness_action) j["witness_action"] = action_to_one_based(*report.witness_action);
    return j;
}

json to_json(const ConditionReport& report) {
    json j{{"regime", report.regime == Regime::Positive ? "positive" : "negative"},
           {"horizon", report.finite ? "finite" : "infinite"},
           {"r_upper", report.r_upper},
           {"r_lower", report.r_lower},
           {"lhs", report.lhs},
           {"threshold", report.threshold},
           {"satisfied", report.satisfied},
           {"unconditional", report.unconditional},
           {"belief_domain_note", report.belief_domain_note}};
    if (report.table_variant_satisfied) {
        j["table_variant_satisfied"] = *report.table_variant_satisfied;
    }
    return j;
}

json to_json(const BoundSequence& bounds) {
    return json{{"T", bounds.T},
                {"upper", bounds.upper},
                {"lower", bounds.lower},
                {"eta", bounds.eta},
                {"delta_inf", bounds.delta_inf},
                {"unbounded", bounds.unbounded}};
}

json to_json(const SimResult& result) {
    json j{{"mean", result.mean},
           {"std_error", result.std_error},
           {"ci95", result.ci95}};
    if (!result.per_replication.empty()) j["per_replication"] = result.per_replication;
    return j;
}

json to_json(const SweepRow& row) {
    return json{{"p01", row.p01},
                {"p11", row.p11},
                {"r_upper", row.r_upper},
                {"r_lower", row.r_lower},
                {"lhs", row.lhs},
                {"threshold", row.threshold},
                {"satisfied", row.satisfied},
                {"unconditional", row.unconditional}};
}

json to_json(const CounterexampleReport& report) {
    json arr = json::array();
    for (const auto& a : report.optimal_first_actions) arr.push_back(action_to_one_based(a));
    return json{{"w_myopic", report.w_myopic},
                {"w_deviation", report.w_deviation},
                {"gap", report.gap},
                {"myopic_optimal", report.myopic_optimal},
                {"optimal_first_actions", arr}};
}

}  // namespace osa
