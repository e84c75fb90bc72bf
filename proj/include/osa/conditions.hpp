#pragma once

#include <optional>
#include <string>
#include <vector>

#include "osa/model.hpp"

namespace osa {

enum class Regime { Positive, Negative };

// Outcome of a sufficient-condition check for myopic optimality.  `satisfied`
// is computed in product form (e.g. beta * r_upper <= r_lower) so degenerate
// zero bounds don't divide; `threshold`/`lhs` are the reportable quotients.
struct ConditionReport {
    Regime regime = Regime::Positive;
    bool finite = true;
    double r_upper = 0.0;
    double r_lower = 0.0;
    double lhs = 0.0;        // beta (finite) or the correlation term (infinite)
    double threshold = 0.0;  // what lhs is compared against
    bool satisfied = false;
    bool unconditional = false;  // k >= N-1: optimal with no condition at all
    // Negative-regime infinite horizon only: the looser alternative form
    // (lhs <= r_upper/r_lower) alongside the stricter default form.
    std::optional<bool> table_variant_satisfied;
    std::string belief_domain_note;
};

// Finite horizon.  Positive regime: beta <= r_lower/r_upper, valid for beliefs
// in [p01,p11]^N.  Negative: beta <= r_lower/(r_lower+r_upper), beliefs in
// [p11,p01]^N.  Unconditional when k >= N-1.
ConditionReport finite_condition(const ChannelModel& model, int n, int k, int m,
                                 double beta);

// Infinite horizon (discount-free sufficient conditions).  Positive regime:
// delta/(1-delta) < r_lower/r_upper (strict).  Negative regime (stricter
// form, the default): min{delta, 1/(2(1-delta))} <= r_lower/r_upper; the
// table variant compares against r_upper/r_lower instead.
ConditionReport infinite_condition(const ChannelModel& model, int n, int k, int m);

// Per-step bounds on dW/d(omega_j), the sensitivity of the myopic value to one
// belief coordinate.  Index i holds the bound for t = i+1; upper[T-1] = the
// horizon-end value.
struct BoundSequence {
    int T = 0;
    std::vector<double> upper;   // Positive: Delta_t; Negative: upper bound
    std::vector<double> lower;   // Positive: all zeros; Negative: lower bound
    double eta = 0.0;            // Negative regime: r_lower - beta*delta*r_upper
    double delta_inf = 0.0;      // Positive: r_upper/(1 - beta*delta)
    bool unbounded = false;      // Positive with beta*delta = 1: the geometric
                                 // series diverges and delta_inf is meaningless
};

// Positive regime: Delta_T = r_upper, Delta_t = r_upper + beta*delta*Delta_{t+1}
// (computed by that recursion, so the recursion identity holds to the bit).
// Negative regime: eta = r_lower - beta*delta*r_upper; if eta >= 0 the bounds
// are [0, r_upper] for all t, else the geometric forms
//   lower_t = (1-(beta*delta)^(T-t+3))/(1-(beta*delta)^2) * eta,
//   upper_t = r_upper - lower_t.
BoundSequence delta_bounds(const ChannelModel& model, int k, int m, double beta, int T);

}  // namespace osa
