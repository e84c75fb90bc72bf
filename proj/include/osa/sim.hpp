#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "osa/model.hpp"
#include "osa/policy.hpp"

namespace osa {

struct SimConfig {
    enum class InitMode { SampleFromBelief, FixedStates };

    int horizon = 1;                 // steps per replication
    long long replications = 1;
    double beta = 1.0;               // discount; exactly 1 = average-reward mode
    std::uint64_t seed = 0;
    InitMode init_mode = InitMode::SampleFromBelief;
    std::vector<int> fixed_states;   // used with FixedStates; length N
    int burn_in = -1;                // average mode: steps dropped; -1 = horizon/10
    bool keep_per_replication = false;
};

struct SimResult {
    double mean = 0.0;
    double std_error = 0.0;
    std::array<double, 2> ci95{0.0, 0.0};
    std::vector<double> per_replication;  // empty unless requested
};

// One Markov step of a true channel state (1 = good).
int sample_channel_step(int state, const ChannelModel& model, std::mt19937_64& rng);

// Monte Carlo rollout of a stepwise policy.  Each replication r runs on its
// own generator seeded from (config.seed, r), so results are independent of
// scheduling and bit-reproducible.  Per step: the policy picks an action from
// the running belief, the k chosen channels' true states are revealed, reward
// min(#good among them, m) accrues (discounted by beta^(t-1), or averaged past
// the burn-in when beta = 1), the belief updates via transition_belief, and
// the hidden states take one Markov step before the next round.
SimResult simulate(const ChannelModel& model, const BeliefState& belief,
                   const PolicySpec& spec, const SimConfig& config);

}  // namespace osa
