#pragma once

#include <json.hpp>

#include "osa/conditions.hpp"
#include "osa/dp.hpp"
#include "osa/model.hpp"
#include "osa/policy.hpp"
#include "osa/sim.hpp"
#include "osa/sweep.hpp"

// Serialization boundary.  Channel indices are 1-based on the JSON side
// (the convention used in the reference tables) and 0-based in memory; the conversion
// happens here and only here.

namespace osa {

nlohmann::json to_json(const ChannelModel& model);
ChannelModel channel_model_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BeliefState& belief);
BeliefState belief_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Action& action);        // 1-based array
Action action_from_json(const nlohmann::json& j, int n);

nlohmann::json to_json(const PolicySpec& spec);
PolicySpec policy_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ValueResult& result);
nlohmann::json to_json(const DeviationReport& report);
nlohmann::json to_json(const ConditionReport& report);
nlohmann::json to_json(const BoundSequence& bounds);
nlohmann::json to_json(const SimResult& result);
nlohmann::json to_json(const SweepRow& row);
nlohmann::json to_json(const CounterexampleReport& report);

}  // namespace osa
