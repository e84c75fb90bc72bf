#pragma once

#include <optional>
#include <vector>

#include "osa/model.hpp"
#include "osa/policy.hpp"

namespace osa {

// Finite horizon: T steps discounted by beta^(t-1), beta in [0,1] (beta = 1
// only makes sense here).  Infinite horizon: 0 < beta < 1 plus a truncation
// tolerance epsilon; see infinite_value_truncated.
struct HorizonSpec {
    bool finite = true;
    int T = 1;
    double beta = 1.0;
    double epsilon = 0.0;

    static HorizonSpec finite_horizon(int T, double beta);
    static HorizonSpec infinite_horizon(double beta, double epsilon);
};

struct ValueResult {
    double value = 0.0;
    double error_bound = 0.0;            // 0 for exact finite evaluation
    std::vector<Action> first_actions;   // filled by optimal_value only
};

// Exact expected discounted reward of a stepwise policy over a finite horizon,
// recursing over all 2^k sensing outcomes per step (with a transposition table
// keyed on exact belief bit patterns — transitions are deterministic given
// outcomes, so identical subtrees coalesce).  Infinite horizons are rejected;
// use infinite_value_truncated.
ValueResult evaluate_policy(const ChannelModel& model, const BeliefState& belief,
                            const PolicySpec& spec, const HorizonSpec& horizon);

// Exact optimum by enumerating all C(N,k) actions at every node.  Returns all
// first actions within 1e-9 of the max.  Desk-scale guard unless overridden:
// C(N,k) * 2^k <= 4096 and T <= 8.
ValueResult optimal_value(const ChannelModel& model, const BeliefState& belief,
                          int k, int m, const HorizonSpec& horizon,
                          bool override_scale_guard = false);

// Discounted infinite-horizon value, truncated at the smallest T with
// m * beta^T / (1-beta) <= epsilon; error_bound reports that tail bound.
ValueResult infinite_value_truncated(const ChannelModel& model, const BeliefState& belief,
                                     const PolicySpec& spec, double beta, double epsilon);

// The W recursion on an ordered value list: sense the first k slots, then
// re-rank per regime (see advance_order) and recurse; T steps, discount beta.
// For a nonincreasing input this equals evaluate_policy(Myopic); for other
// orders it evaluates "sense the listed first k, then myopic".
double w_value(const ChannelModel& model, const std::vector<double>& ordered,
               int k, int m, double beta, int T);

struct DeviationReport {
    bool profitable_found = false;
    std::optional<BeliefState> witness_belief;
    std::optional<Action> witness_action;
    double gain = 0.0;            // best gain seen (can be <= 0 if none profit)
    long long beliefs_audited = 0;
};

// Candidate beliefs for the audits: every nonincreasing n-vector whose
// coordinates come from {tau^j(p01), tau^j(p11) : j <= depth} — the lattice of
// beliefs reachable from sensing resets.
std::vector<BeliefState> belief_lattice(const ChannelModel& model, int n, int depth);

// One-step deviation audit, infinite horizon: for every lattice belief and
// every alternative first action, compare the deviation's truncated value
// against the myopic value.  A deviation counts as profitable only when its
// gain clears 2 * (truncation error) + 1e-9, so truncation noise can't fake a
// finding.  Reports the best witness.
DeviationReport deviation_audit(const ChannelModel& model, int n, int k, int m,
                                double beta, double epsilon, int belief_grid_depth);

// Finite-horizon variant over an explicit list of candidate beliefs; the
// values are exact, so the profitability threshold is 1e-9 alone.
DeviationReport finite_deviation_audit(const ChannelModel& model, int k, int m,
                                       double beta, int T,
                                       const std::vector<BeliefState>& beliefs);

}  // namespace osa
