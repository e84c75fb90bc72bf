#include "osa/sim.hpp"

#include <cmath>
#include <stdexcept>

#include "osa/rng.hpp"

namespace osa {

int sample_channel_step(int state, const ChannelModel& model, std::mt19937_64& rng) {
    if (state != 0 && state != 1) throw std::invalid_argument("state must be 0 or 1");
    const double p_good = state ? model.p11 : model.p01;
    return uniform01(rng) < p_good ? 1 : 0;
}

SimResult simulate(const ChannelModel& model, const BeliefState& belief,
                   const PolicySpec& spec, const SimConfig& config) {
    if (!spec.stepwise()) {
        throw std::invalid_argument("simulate needs a stepwise policy");
    }
    const int n = belief.n();
    if (spec.k > n) throw std::invalid_argument("k exceeds the number of channels");
    if (config.horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    if (config.replications < 1) throw std::invalid_argument("need >= 1 replication");
    if (!(config.beta > 0.0 && config.beta <= 1.0)) {
        throw std::invalid_argument("beta must be in (0, 1]");
    }
    const bool average_mode = config.beta == 1.0;
    int burn_in = 0;
    if (average_mode) {
        burn_in = config.burn_in >= 0 ? config.burn_in : config.horizon / 10;
        if (burn_in >= config.horizon) {
            throw std::invalid_argument("burn-in must leave at least one step");
        }
    }
    if (config.init_mode == SimConfig::InitMode::FixedStates) {
        if (static_cast<int>(config.fixed_states.size()) != n) {
            throw std::invalid_argument("fixed_states length must equal the channel count");
        }
        for (int s : config.fixed_states) {
            if (s != 0 && s != 1) throw std::invalid_argument("states must be 0 or 1");
        }
    }

    double sum = 0.0, sum_sq = 0.0;
    SimResult result;
    if (config.keep_per_replication) {
        result.per_replication.reserve(static_cast<std::size_t>(config.replications));
    }
    std::vector<int> states(static_cast<std::size_t>(n));
    for (long long rep = 0; rep < config.replications; ++rep) {
        // one private stream per replication: results don't depend on
        // execution order and any replication can be reproduced in isolation
        std::mt19937_64 rng(mix_seed(config.seed, static_cast<std::uint64_t>(rep)));
        if (config.init_mode == SimConfig::InitMode::FixedStates) {
            for (int c = 0; c < n; ++c) states[static_cast<std::size_t>(c)] = config.fixed_states[static_cast<std::size_t>(c)];
        } else {
            for (int c = 0; c < n; ++c) {
                states[static_cast<std::size_t>(c)] =
                    uniform01(rng) < belief.omegas[static_cast<std::size_t>(c)] ? 1 : 0;
            }
        }
        BeliefState running = belief;
        double total = 0.0;
        double discount = 1.0;
        for (int t = 1; t <= config.horizon; ++t) {
            const Action action = policy_action(spec, running, t);
            SensingOutcome outcome(static_cast<std::size_t>(spec.k));
            int good = 0;
            for (int i = 0; i < spec.k; ++i) {
                const int s = states[static_cast<std::size_t>(action.channels[static_cast<std::size_t>(i)])];
                outcome[static_cast<std::size_t>(i)] = s;
                good += s;
            }
            const double reward = static_cast<double>(std::min(good, spec.m));
            if (average_mode) {
                if (t > burn_in) total += reward;
            } else {
                total += discount * reward;
                discount *= config.beta;
            }
            running = transition_belief(model, running, action, outcome);
            if (t < config.horizon) {
                for (int c = 0; c < n; ++c) {
                    states[static_cast<std::size_t>(c)] =
                        sample_channel_step(states[static_cast<std::size_t>(c)], model, rng);
                }
            }
        }
        const double score = average_mode
                                 ? total / static_cast<double>(config.horizon - burn_in)
                                 : total;
        sum += score;
        sum_sq += score * score;
        if (config.keep_per_replication) result.per_replication.push_back(score);
    }

    const double r = static_cast<double>(config.replications);
    result.mean = sum / r;
    if (config.replications > 1) {
        // unbiased sample variance, clamped: roundoff can push it barely negative
        const double var = std::max(0.0, (sum_sq - sum * sum / r) / (r - 1.0));
        result.std_error = std::sqrt(var / r);
    }
    result.ci95 = {result.mean - 1.96 * result.std_error,
                   result.mean + 1.96 * result.std_error};
    return result;
}

}  // namespace osa
