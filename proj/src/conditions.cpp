#include "osa/conditions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "osa/reward.hpp"

namespace osa {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_km(int n, int k, int m) {
    if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, n]");
    if (m < 1 || m > k) throw std::invalid_argument("m must be in [1, k]");
}

std::string box_note(const ChannelModel& model) {
    return model.positive() ? "valid for beliefs in [p01, p11]^N"
                            : "valid for beliefs in [p11, p01]^N";
}

}  // namespace

ConditionReport finite_condition(const ChannelModel& model, int n, int k, int m,
                                 double beta) {
    check_km(n, k, m);
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must be in [0,1]");
    const RewardGapBounds g = reward_gap_bounds(model, k, m);
    ConditionReport rep;
    rep.finite = true;
    rep.r_upper = g.r_upper;
    rep.r_lower = g.r_lower;
    rep.lhs = beta;
    rep.unconditional = k >= n - 1;
    rep.belief_domain_note = box_note(model);
    if (model.positive()) {
        rep.regime = Regime::Positive;
        // beta <= r_lower / r_upper, in product form so r_upper = 0 (which
        // forces r_lower = 0: no sensing outcome ever matters) stays sane
        rep.threshold = g.r_upper > 0.0 ? g.r_lower / g.r_upper : kInf;
        rep.satisfied = beta * g.r_upper <= g.r_lower;
    } else {
        rep.regime = Regime::Negative;
        rep.threshold = g.r_lower + g.r_upper > 0.0
                            ? g.r_lower / (g.r_lower + g.r_upper)
                            : kInf;
        rep.satisfied = beta * (g.r_lower + g.r_upper) <= g.r_lower;
    }
    if (rep.unconditional) rep.satisfied = true;
    return rep;
}

ConditionReport infinite_condition(const ChannelModel& model, int n, int k, int m) {
    check_km(n, k, m);
    const RewardGapBounds g = reward_gap_bounds(model, k, m);
    const double delta = model.delta();
    ConditionReport rep;
    rep.finite = false;
    rep.r_upper = g.r_upper;
    rep.r_lower = g.r_lower;
    rep.unconditional = k >= n - 1;
    rep.belief_domain_note = box_note(model);
    if (model.positive()) {
        rep.regime = Regime::Positive;
        rep.lhs = delta < 1.0 ? delta / (1.0 - delta) : kInf;
        rep.threshold = g.r_upper > 0.0 ? g.r_lower / g.r_upper : kInf;
        // strict: delta/(1-delta) < r_lower/r_upper.  delta = 0 means the
        // future is action-independent, so the condition holds vacuously.
        rep.satisfied =
            delta == 0.0 || (delta < 1.0 && delta * g.r_upper < (1.0 - delta) * g.r_lower);
    } else {
        rep.regime = Regime::Negative;
        // stricter default form: min{delta, 1/(2(1-delta))} <= r_lower/r_upper
        const double alt = delta < 1.0 ? 1.0 / (2.0 * (1.0 - delta)) : kInf;
        rep.lhs = std::min(delta, alt);
        rep.threshold = g.r_upper > 0.0 ? g.r_lower / g.r_upper : kInf;
        rep.satisfied = rep.lhs * g.r_upper <= g.r_lower;
        // the table variant compares against the reciprocal ratio
        rep.table_variant_satisfied = rep.lhs * g.r_lower <= g.r_upper;
    }
    if (rep.unconditional) {
        rep.satisfied = true;
        if (rep.table_variant_satisfied) rep.table_variant_satisfied = true;
    }
    return rep;
}

BoundSequence delta_bounds(const ChannelModel& model, int k, int m, double beta, int T) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (m < 1 || m > k) throw std::invalid_argument("m must be in [1, k]");
    if (T < 1) throw std::invalid_argument("T must be >= 1");
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must be in [0,1]");
    const RewardGapBounds g = reward_gap_bounds(model, k, m);
    const double x = beta * model.delta();
    BoundSequence seq;
    seq.T = T;
    seq.upper.assign(static_cast<std::size_t>(T), 0.0);
    seq.lower.assign(static_cast<std::size_t>(T), 0.0);
    if (model.positive()) {
        // Delta_T = r_upper, Delta_t = r_upper + beta*delta*Delta_{t+1}
        seq.upper[static_cast<std::size_t>(T - 1)] = g.r_upper;
        for (int t = T - 1; t >= 1; --t) {
            seq.upper[static_cast<std::size_t>(t - 1)] =
                g.r_upper + x * seq.upper[static_cast<std::size_t>(t)];
        }
        seq.unbounded = x >= 1.0 && g.r_upper > 0.0;
        seq.delta_inf = seq.unbounded ? std::numeric_limits<double>::infinity()
                                      : g.r_upper / (1.0 - x);
        seq.eta = std::numeric_limits<double>::quiet_NaN();
    } else {
        seq.eta = g.r_lower - x * g.r_upper;
        if (seq.eta >= 0.0) {
            for (int t = 1; t <= T; ++t) {
                seq.lower[static_cast<std::size_t>(t - 1)] = 0.0;
                seq.upper[static_cast<std::size_t>(t - 1)] = g.r_upper;
            }
        } else {
            for (int t = 1; t <= T; ++t) {
                const int exp = T - t + 3;
                // (1 - x^exp) / (1 - x^2), with the x -> 1 limit exp/2
                const double s = x == 1.0 ? static_cast<double>(exp) / 2.0
                                          : (1.0 - std::pow(x, exp)) / (1.0 - x * x);
                seq.lower[static_cast<std::size_t>(t - 1)] = s * seq.eta;
                seq.upper[static_cast<std::size_t>(t - 1)] = g.r_upper - s * seq.eta;
            }
        }
        seq.delta_inf = std::numeric_limits<double>::quiet_NaN();
    }
    return seq;
}

}  // namespace osa
