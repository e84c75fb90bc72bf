#pragma once

#include <vector>

#include "osa/model.hpp"

namespace osa {

// Poisson-binomial pmf of the number of successes among independent
// Bernoulli(probs[i]) trials; result has probs.size()+1 entries and sums to 1.
// O(k^2) iterative convolution.
std::vector<double> success_count_distribution(const std::vector<double>& probs);

// Expected one-step reward E[min(L, m)] where L counts good channels among the
// sensed beliefs.  The caller gets to use at most m of the channels it sensed.
double expected_reward(const std::vector<double>& sensed_beliefs, int m);
double expected_reward(const BeliefState& belief, const Action& action, int m);

// Marginal value of one sensed channel being good rather than bad, with the
// other k-1 sensed beliefs at omega_rest:
//   E[R(1, rest)] - E[R(0, rest)] = P(L_rest <= m-1).
// Nonincreasing in every coordinate of omega_rest.
double reward_gap(const std::vector<double>& omega_rest, int m);

struct RewardGapBounds {
    double r_upper;  // max of reward_gap over the belief box ^ (k-1)
    double r_lower;  // min over the same box
};

// Extremes of reward_gap over [belief_lo, belief_hi]^(k-1).  The gap is
// monotone per coordinate, so the extremes sit at the all-lo / all-hi corners.
RewardGapBounds reward_gap_bounds(const ChannelModel& model, int k, int m);

// Brute-force cross-check: grid search over the box, points_per_axis per
// coordinate.  Exponential in k; kept as an oracle, not a production path.
RewardGapBounds reward_gap_bounds_grid(const ChannelModel& model, int k, int m,
                                       int points_per_axis = 21);

}  // namespace osa
