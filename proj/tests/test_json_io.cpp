#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "osa/json_io.hpp"

using nlohmann::json;
using osa::Action;
using osa::BeliefState;
using osa::ChannelModel;
using osa::PolicySpec;

TEST_SUITE("json_io") {

TEST_CASE("channel model round-trip with exact field names") {
    const ChannelModel model(0.8, 0.3);
    const json j = osa::to_json(model);
    CHECK(j.size() == 2);
    CHECK(j.at("p11").get<double>() == 0.8);
    CHECK(j.at("p01").get<double>() == 0.3);
    const ChannelModel back = osa::channel_model_from_json(j);
    CHECK(back.p11 == model.p11);
    CHECK(back.p01 == model.p01);
    CHECK_THROWS(osa::channel_model_from_json(json{{"p11", 0.5}}));
    CHECK_THROWS_AS(osa::channel_model_from_json(json{{"p11", 1.5}, {"p01", 0.5}}),
                    std::invalid_argument);
}

TEST_CASE("belief round-trip") {
    const BeliefState w({0.9, 0.5, 0.25});
    const json j = osa::to_json(w);
    CHECK(j.at("omegas").get<std::vector<double>>() == w.omegas);
    CHECK(osa::belief_from_json(j).omegas == w.omegas);
    CHECK_THROWS(osa::belief_from_json(json::object()));
}

TEST_CASE("actions serialize 1-based and parse back 0-based") {
    const Action action({0, 2}, 5);
    const json j = osa::to_json(action);
    CHECK(j == json::array({1, 3}));
    const Action back = osa::action_from_json(j, 5);
    CHECK(back.channels == std::vector<int>{0, 2});
    // channel 6 of 5 is out of range once rebased
    CHECK_THROWS_AS(osa::action_from_json(json::array({1, 6}), 5), std::invalid_argument);
    CHECK_THROWS_AS(osa::action_from_json(json::array({0}), 5), std::invalid_argument);
    CHECK_THROWS_AS(osa::action_from_json(json{{"not", "array"}}, 5), std::invalid_argument);
}

TEST_CASE("policy specs round-trip for every kind") {
    const PolicySpec specs[] = {
        PolicySpec::myopic(2, 1),
        PolicySpec::fixed_first({0, 3}, 2, 2),
        PolicySpec::random(12345, 3, 1),
        PolicySpec::optimal(2, 1),
    };
    const char* kinds[] = {"myopic", "fixed", "random", "optimal"};
    for (int i = 0; i < 4; ++i) {
        const json j = osa::to_json(specs[i]);
        CHECK(j.at("kind").get<std::string>() == kinds[i]);
        CHECK(j.at("k").get<int>() == specs[i].k);
        CHECK(j.at("m").get<int>() == specs[i].m);
        const PolicySpec back = osa::policy_spec_from_json(j);
        CHECK(back.kind == specs[i].kind);
        CHECK(back.k == specs[i].k);
        CHECK(back.m == specs[i].m);
        CHECK(back.first_action == specs[i].first_action);
        CHECK(back.seed == specs[i].seed);
    }
    // the fixed policy's first action crosses the boundary 1-based
    const json fixed = osa::to_json(specs[1]);
    CHECK(fixed.at("first_action") == json::array({1, 4}));
    CHECK_THROWS_AS(osa::policy_spec_from_json(json{{"kind", "greedy"}, {"k", 1}, {"m", 1}}),
                    std::invalid_argument);
}

TEST_CASE("value results include first actions only when present") {
    osa::ValueResult plain;
    plain.value = 1.5;
    plain.error_bound = 1e-7;
    const json j = osa::to_json(plain);
    CHECK(j.at("value").get<double>() == 1.5);
    CHECK(j.at("error_bound").get<double>() == 1e-7);
    CHECK_FALSE(j.contains("first_actions"));

    osa::ValueResult with_actions = plain;
    with_actions.first_actions = {Action({0, 2}, 4), Action({1, 3}, 4)};
    const json j2 = osa::to_json(with_actions);
    CHECK(j2.at("first_actions") == json::array({{1, 3}, {2, 4}}));
}

TEST_CASE("deviation reports expose the witness only when found") {
    osa::DeviationReport quiet;
    quiet.beliefs_audited = 42;
    const json j = osa::to_json(quiet);
    CHECK(j.at("profitable_found").get<bool>() == false);
    CHECK(j.at("beliefs_audited").get<long long>() == 42);
    CHECK_FALSE(j.contains("witness_belief"));
    CHECK_FALSE(j.contains("witness_action"));

    osa::DeviationReport loud = quiet;
    loud.profitable_found = true;
    loud.gain = 2.8e-4;
    loud.witness_belief = BeliefState({0.99, 0.9});
    loud.witness_action = Action({1}, 2);
    const json j2 = osa::to_json(loud);
    CHECK(j2.at("witness_belief").at("omegas").get<std::vector<double>>() ==
          std::vector<double>{0.99, 0.9});
    CHECK(j2.at("witness_action") == json::array({2}));
}

TEST_CASE("condition reports name the regime and horizon in words") {
    const auto fin = osa::finite_condition(ChannelModel(0.9, 0.1), 4, 2, 1, 0.1);
    const json j = osa::to_json(fin);
    CHECK(j.at("regime").get<std::string>() == "positive");
    CHECK(j.at("horizon").get<std::string>() == "finite");
    CHECK(j.at("satisfied").get<bool>() == true);
    CHECK(j.at("lhs").get<double>() == 0.1);
    CHECK_FALSE(j.contains("table_variant_satisfied"));
    CHECK_FALSE(j.at("belief_domain_note").get<std::string>().empty());

    const auto inf = osa::infinite_condition(ChannelModel(0.1, 0.9), 4, 2, 1);
    const json j2 = osa::to_json(inf);
    CHECK(j2.at("regime").get<std::string>() == "negative");
    CHECK(j2.at("horizon").get<std::string>() == "infinite");
    REQUIRE(j2.contains("table_variant_satisfied"));
    CHECK(j2.at("table_variant_satisfied").get<bool>() == true);
}

TEST_CASE("bound sequences carry both envelopes") {
    const auto b = osa::delta_bounds(ChannelModel(0.9, 0.1), 2, 1, 0.5, 3);
    const json j = osa::to_json(b);
    CHECK(j.at("T").get<int>() == 3);
    CHECK(j.at("upper").get<std::vector<double>>() == b.upper);
    CHECK(j.at("lower").get<std::vector<double>>() == b.lower);
    CHECK(j.at("delta_inf").get<double>() == b.delta_inf);
    CHECK(j.at("unbounded").get<bool>() == false);
    CHECK(j.contains("eta"));
}

TEST_CASE("simulation results keep the trace optional") {
    osa::SimResult r;
    r.mean = 0.5;
    r.std_error = 0.01;
    r.ci95 = {0.48, 0.52};
    const json j = osa::to_json(r);
    CHECK(j.at("ci95").get<std::vector<double>>() == std::vector<double>{0.48, 0.52});
    CHECK_FALSE(j.contains("per_replication"));
    r.per_replication = {1.0, 0.0};
    CHECK(osa::to_json(r).at("per_replication").get<std::vector<double>>() ==
          std::vector<double>{1.0, 0.0});
}

TEST_CASE("sweep rows and the counterexample report serialize 1-based actions") {
    osa::SweepRow row{0.1, 0.9, 0.9, 0.1, 1.0 / 9.0, 0.8, true, false};
    const json j = osa::to_json(row);
    CHECK(j.at("p01").get<double>() == 0.1);
    CHECK(j.at("p11").get<double>() == 0.9);
    CHECK(j.at("satisfied").get<bool>() == true);
    CHECK(j.size() == 8);

    osa::CounterexampleReport rep;
    rep.w_myopic = 1.0;
    rep.w_deviation = 2.0;
    rep.gap = 1.0;
    rep.myopic_optimal = false;
    rep.optimal_first_actions = {Action({0, 2}, 5), Action({0, 3}, 5)};
    const json j2 = osa::to_json(rep);
    CHECK(j2.at("optimal_first_actions") == json::array({{1, 3}, {1, 4}}));
    CHECK(j2.at("myopic_optimal").get<bool>() == false);
}

}  // TEST_SUITE
