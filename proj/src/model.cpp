#include "osa/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace osa {

namespace {
constexpr double kTol = 1e-12;

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must be in [0,1], got " +
                                    std::to_string(p));
    }
}
}  // namespace

ChannelModel::ChannelModel(double p11_, double p01_) : p11(p11_), p01(p01_) {
    check_probability(p11, "p11");
    check_probability(p01, "p01");
}

double ChannelModel::stationary() const {
    const double denom = 1.0 - p11 + p01;
    if (denom == 0.0) {
        // p11 = 1, p01 = 0: both states absorbing, no unique fixed point.
        throw std::domain_error("stationary belief undefined for p11=1, p01=0");
    }
    return p01 / denom;
}

double tau(const ChannelModel& model, double omega) {
    if (!(omega >= -kTol && omega <= 1.0 + kTol)) {
        throw std::domain_error("tau: belief outside [0,1]: " + std::to_string(omega));
    }
    omega = std::clamp(omega, 0.0, 1.0);
    return omega * model.p11 + (1.0 - omega) * model.p01;
}

BeliefState::BeliefState(std::vector<double> values) : omegas(std::move(values)) {
    if (omegas.empty()) {
        throw std::invalid_argument("belief state needs at least one channel");
    }
    for (double& w : omegas) {
        if (!(w >= -kTol && w <= 1.0 + kTol)) {
            throw std::invalid_argument("belief coordinate outside [0,1]: " +
                                        std::to_string(w));
        }
        w = std::clamp(w, 0.0, 1.0);
    }
}

bool BeliefState::in_box(const ChannelModel& model) const {
    const double lo = model.belief_lo() - kTol;
    const double hi = model.belief_hi() + kTol;
    return std::all_of(omegas.begin(), omegas.end(),
                       [&](double w) { return w >= lo && w <= hi; });
}

Action::Action(std::vector<int> idx, int n) : channels(std::move(idx)) {
    if (channels.empty() || static_cast<int>(channels.size()) > n) {
        throw std::invalid_argument("action must pick between 1 and n channels");
    }
    if (!std::is_sorted(channels.begin(), channels.end())) {
        std::sort(channels.begin(), channels.end());
    }
    for (std::size_t i = 0; i < channels.size(); ++i) {
        if (channels[i] < 0 || channels[i] >= n) {
            throw std::invalid_argument("action channel index out of range: " +
                                        std::to_string(channels[i]));
        }
        if (i > 0 && channels[i] == channels[i - 1]) {
            throw std::invalid_argument("action channels must be distinct");
        }
    }
}

BeliefState transition_belief(const ChannelModel& model, const BeliefState& belief,
                              const Action& action, const SensingOutcome& outcome) {
    if (outcome.size() != action.channels.size()) {
        throw std::invalid_argument("outcome length must match action size");
    }
    BeliefState next = belief;
    for (double& w : next.omegas) w = tau(model, w);
    for (std::size_t i = 0; i < outcome.size(); ++i) {
        if (outcome[i] != 0 && outcome[i] != 1) {
            throw std::invalid_argument("outcome entries must be 0 or 1");
        }
        next.omegas[action.channels[i]] = outcome[i] ? model.p11 : model.p01;
    }
    return next;
}

double outcome_probability(const BeliefState& belief, const Action& action,
                           const SensingOutcome& outcome) {
    if (outcome.size() != action.channels.size()) {
        throw std::invalid_argument("outcome length must match action size");
    }
    double p = 1.0;
    for (std::size_t i = 0; i < outcome.size(); ++i) {
        const double w = belief.omegas[action.channels[i]];
        p *= outcome[i] ? w : 1.0 - w;
    }
    return p;
}

}  // namespace osa
