#pragma once

#include <cstdint>
#include <vector>

namespace osa {

// Two-state Markov channel: p11 = P(good stays good), p01 = P(bad turns good).
// p11 >= p01 is the positively correlated regime (today's state is good news
// for tomorrow), p11 < p01 the negatively correlated one.
struct ChannelModel {
    double p11;
    double p01;

    ChannelModel(double p11_, double p01_);

    bool positive() const { return p11 >= p01; }
    double delta() const { return positive() ? p11 - p01 : p01 - p11; }
    double belief_lo() const { return positive() ? p01 : p11; }
    double belief_hi() const { return positive() ? p11 : p01; }

    // Fixed point of tau; requires p11 - p01 != 1 (i.e. not the identity chain).
    double stationary() const;
};

// One-step belief propagation for an unobserved channel.
// Domain error if omega is outside [0,1] (tolerance 1e-12).
double tau(const ChannelModel& model, double omega);

// Probability vector "channel i is good now", one entry per channel.
struct BeliefState {
    std::vector<double> omegas;

    BeliefState() = default;
    explicit BeliefState(std::vector<double> values);

    int n() const { return static_cast<int>(omegas.size()); }

    // All coordinates inside [belief_lo, belief_hi] (tolerance 1e-12); the
    // optimality guarantees only claim anything for beliefs in this box.
    bool in_box(const ChannelModel& model) const;
};

// A size-k sensing choice.  Channels are 0-based and strictly increasing here;
// the JSON/CLI layer converts to the 1-based convention used in all user I/O.
struct Action {
    std::vector<int> channels;

    Action() = default;
    Action(std::vector<int> idx, int n);  // validates range/distinctness

    int k() const { return static_cast<int>(channels.size()); }
};

// Sensing result aligned with Action::channels: 1 = good, 0 = bad.
using SensingOutcome = std::vector<int>;

// Posterior belief for the next step: sensed-good -> p11, sensed-bad -> p01,
// unsensed -> tau(omega).  Positions are preserved.
BeliefState transition_belief(const ChannelModel& model, const BeliefState& belief,
                              const Action& action, const SensingOutcome& outcome);

// P(outcome | belief, action) = prod over sensed channels of omega^l (1-omega)^(1-l).
double outcome_probability(const BeliefState& belief, const Action& action,
                           const SensingOutcome& outcome);

}  // namespace osa
