#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "osa/model.hpp"

namespace osa {

enum class PolicyKind { Myopic, FixedFirstThenMyopic, Random, ExhaustiveOptimal };

// What to run: the greedy policy, a forced first action followed by greedy,
// uniformly random actions from a seeded stream, or exhaustive optimization
// (the last is only meaningful to optimal_value, not to stepwise execution).
struct PolicySpec {
    PolicyKind kind = PolicyKind::Myopic;
    int k = 1;
    int m = 1;
    std::optional<std::vector<int>> first_action;  // FixedFirstThenMyopic, 0-based
    std::optional<std::uint64_t> seed;             // Random

    static PolicySpec myopic(int k, int m);
    static PolicySpec fixed_first(std::vector<int> action, int k, int m);
    static PolicySpec random(std::uint64_t seed, int k, int m);
    static PolicySpec optimal(int k, int m);

    bool stepwise() const { return kind != PolicyKind::ExhaustiveOptimal; }
};

// The k channels with the largest beliefs; ties go to the lowest channel index.
Action myopic_action(const BeliefState& belief, int k);

// Action for step t (1-based).  Myopic ignores t; FixedFirstThenMyopic forces
// first_action at t=1; Random draws a uniform size-k subset from a generator
// seeded by (seed, t), which makes it a pure function of the PolicySpec and t —
// reproducible bit-for-bit and identical between simulation and exact DP.
// Errors on ExhaustiveOptimal.
Action policy_action(const PolicySpec& spec, const BeliefState& belief, int t);

// Belief values sorted nonincreasing plus the channel each slot came from.
// This is the ordering-based implementation of the myopic policy: sense the
// first k slots, then re-rank with advance_order instead of re-sorting.
struct OrderedBelief {
    std::vector<double> values;    // nonincreasing
    std::vector<int> channels;     // values[i] is the belief of channels[i]

    static OrderedBelief from_belief(const BeliefState& belief);
};

// One myopic step without sorting.  The first outcome.size() slots were
// sensed.  Positively correlated: good channels (now p11) move to the front,
// unsensed slots keep their order under tau, bad ones (p01) drop to the back.
// Negatively correlated: bad channels (now p01) lead, unsensed slots reverse
// (tau flips their order), good ones (p11) trail.
OrderedBelief advance_order(const ChannelModel& model, const OrderedBelief& ordered,
                            const SensingOutcome& outcome);

}  // namespace osa
