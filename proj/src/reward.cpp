#include "osa/reward.hpp"

#include <cmath>
#include <stdexcept>

namespace osa {

std::vector<double> success_count_distribution(const std::vector<double>& probs) {
    std::vector<double> dist{1.0};
    dist.reserve(probs.size() + 1);
    for (double p : probs) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("success probability outside [0,1]");
        }
        dist.push_back(0.0);
        // in-place backward update: dist[l] = old[l]*(1-p) + old[l-1]*p
        for (std::size_t l = dist.size() - 1; l > 0; --l) {
            dist[l] = dist[l] * (1.0 - p) + dist[l - 1] * p;
        }
        dist[0] *= 1.0 - p;
    }
    return dist;
}

double expected_reward(const std::vector<double>& sensed_beliefs, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (m > static_cast<int>(sensed_beliefs.size())) {
        throw std::invalid_argument("m must not exceed the number of sensed channels");
    }
    const auto dist = success_count_distribution(sensed_beliefs);
    double r = 0.0;
    for (std::size_t l = 1; l < dist.size(); ++l) {
        r += dist[l] * static_cast<double>(std::min<int>(static_cast<int>(l), m));
    }
    return r;
}

double expected_reward(const BeliefState& belief, const Action& action, int m) {
    std::vector<double> sensed;
    sensed.reserve(action.channels.size());
    for (int c : action.channels) sensed.push_back(belief.omegas[c]);
    return expected_reward(sensed, m);
}

double reward_gap(const std::vector<double>& omega_rest, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const auto dist = success_count_distribution(omega_rest);
    double p = 0.0;
    for (int l = 0; l < m && l < static_cast<int>(dist.size()); ++l) p += dist[l];
    return p;
}

RewardGapBounds reward_gap_bounds(const ChannelModel& model, int k, int m) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (m < 1 || m > k) throw std::invalid_argument("m must be in [1,k]");
    // The gap P(L <= m-1) shrinks as any rest-coordinate grows, so the box
    // extremes are the two uniform corners.
    const std::vector<double> lo(static_cast<std::size_t>(k - 1), model.belief_lo());
    const std::vector<double> hi(static_cast<std::size_t>(k - 1), model.belief_hi());
    return RewardGapBounds{reward_gap(lo, m), reward_gap(hi, m)};
}

RewardGapBounds reward_gap_bounds_grid(const ChannelModel& model, int k, int m,
                                       int points_per_axis) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (m < 1 || m > k) throw std::invalid_argument("m must be in [1,k]");
    if (points_per_axis < 2) throw std::invalid_argument("need >= 2 grid points per axis");
    const int axes = k - 1;
    if (axes == 0) {
        const double g = reward_gap({}, m);
        return RewardGapBounds{g, g};
    }
    const double lo = model.belief_lo();
    const double hi = model.belief_hi();
    std::vector<double> grid(static_cast<std::size_t>(points_per_axis));
    for (int i = 0; i < points_per_axis; ++i) {
        grid[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points_per_axis - 1);
    }
    double worst_cells = std::pow(static_cast<double>(points_per_axis), axes);
    if (worst_cells > 8e6) {
        throw std::invalid_argument("grid oracle too large; reduce k or points_per_axis");
    }
    std::vector<int> at(static_cast<std::size_t>(axes), 0);
    std::vector<double> rest(static_cast<std::size_t>(axes));
    double best_hi = -1.0, best_lo = 2.0;
    while (true) {
        for (int a = 0; a < axes; ++a) {
            rest[static_cast<std::size_t>(a)] = grid[static_cast<std::size_t>(at[static_cast<std::size_t>(a)])];
        }
        const double g = reward_gap(rest, m);
        if (g > best_hi) best_hi = g;
        if (g < best_lo) best_lo = g;
        int a = 0;
        for (; a < axes; ++a) {
            auto& v = at[static_cast<std::size_t>(a)];
            if (++v < points_per_axis) break;
            v = 0;
        }
        if (a == axes) break;
    }
    return RewardGapBounds{best_hi, best_lo};
}

}  // namespace osa
