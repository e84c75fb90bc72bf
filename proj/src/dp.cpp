#include "osa/dp.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>

#include "osa/errors.hpp"
#include "osa/reward.hpp"
#include "osa/sweep.hpp"

namespace osa {

namespace {

constexpr long long kMaxMemoNodes = 4'000'000;   // evaluate/optimal DFS guard
constexpr std::size_t kMaxEngineStates = 1'500'000;  // W-engine closure guard
constexpr int kMaxTruncationSteps = 4'000'000;

std::string belief_key(const std::vector<double>& omegas, int t) {
    std::string key(omegas.size() * sizeof(double) + sizeof(int), '\0');
    std::memcpy(key.data(), omegas.data(), omegas.size() * sizeof(double));
    std::memcpy(key.data() + omegas.size() * sizeof(double), &t, sizeof(int));
    return key;
}

double binomial_coefficient(int n, int k) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c *= static_cast<double>(n - k + i) / static_cast<double>(i);
    return c;
}

// Enumerate size-k index subsets of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Exact policy evaluation: depth-first over all 2^k outcomes per step, with a
// transposition table keyed on the belief's exact bit pattern plus t.
struct PolicyEvaluator {
    const ChannelModel& model;
    const PolicySpec& spec;
    int T;
    double beta;
    std::unordered_map<std::string, double> memo;

    double run(const BeliefState& belief, int t) {
        const Action action = policy_action(spec, belief, t);
        return run_with_action(belief, action, t);
    }

    double run_with_action(const BeliefState& belief, const Action& action, int t) {
        const double r = expected_reward(belief, action, spec.m);
        if (t == T) return r;
        double total = r;
        const int k = action.k();
        SensingOutcome outcome(static_cast<std::size_t>(k), 0);
        for (unsigned bits = 0; bits < (1u << k); ++bits) {
            for (int i = 0; i < k; ++i) outcome[static_cast<std::size_t>(i)] = (bits >> i) & 1u;
            const double p = outcome_probability(belief, action, outcome);
            if (p == 0.0) continue;
            const BeliefState next = transition_belief(model, belief, action, outcome);
            total += beta * p * value(next, t + 1);
        }
        return total;
    }

    double value(const BeliefState& belief, int t) {
        const std::string key = belief_key(belief.omegas, t);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (static_cast<long long>(memo.size()) >= kMaxMemoNodes) {
            throw ScaleGuardError("policy evaluation exceeded the node guard; "
                                  "reduce T, k, or epsilon");
        }
        const double v = run(belief, t);
        memo.emplace(key, v);
        return v;
    }
};

// ---------------------------------------------------------------------------
// W-engine: value iteration over the closure of ordered belief vectors under
// the regime-reordering transition.  Outcomes with the same good-count map to
// the same successor vector, so each state has k+1 weighted successors with
// Poisson-binomial weights.  Belief coordinates are tau-iterates, which hit
// their floating-point fixed points after finitely many steps, so the closure
// saturates; the guard catches parameter ranges where it would not.
// ---------------------------------------------------------------------------
struct WEngine {
    const ChannelModel& model;
    const int n, k, m;

    std::vector<std::vector<double>> states;
    std::vector<double> rewards;                   // immediate E[min(L,m)]
    std::vector<std::vector<double>> count_probs;  // k+1 per state
    std::vector<std::vector<int>> succ;            // k+1 per state; -1 = unexpanded
    std::vector<int> first_depth;
    std::unordered_map<std::string, int> index;
    bool saturated = false;

    WEngine(const ChannelModel& model_, int n_, int k_, int m_)
        : model(model_), n(n_), k(k_), m(m_) {
        if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, n]");
        if (m < 1 || m > k) throw std::invalid_argument("m must be in [1, k]");
    }

    int intern(const std::vector<double>& v, int depth) {
        const std::string key = belief_key(v, 0);
        if (auto it = index.find(key); it != index.end()) return it->second;
        if (states.size() >= kMaxEngineStates) {
            throw ScaleGuardError("reachable belief closure exceeded the state guard");
        }
        const int id = static_cast<int>(states.size());
        index.emplace(key, id);
        states.push_back(v);
        std::vector<double> sensed(v.begin(), v.begin() + k);
        rewards.push_back(expected_reward(sensed, m));
        count_probs.push_back(success_count_distribution(sensed));
        succ.emplace_back(static_cast<std::size_t>(k) + 1, -1);
        first_depth.push_back(depth);
        return id;
    }

    std::vector<double> successor(const std::vector<double>& v, int goods) const {
        std::vector<double> next;
        next.reserve(v.size());
        if (model.positive()) {
            next.insert(next.end(), static_cast<std::size_t>(goods), model.p11);
            for (int i = k; i < n; ++i) next.push_back(tau(model, v[static_cast<std::size_t>(i)]));
            next.insert(next.end(), static_cast<std::size_t>(k - goods), model.p01);
        } else {
            next.insert(next.end(), static_cast<std::size_t>(k - goods), model.p01);
            for (int i = n - 1; i >= k; --i) next.push_back(tau(model, v[static_cast<std::size_t>(i)]));
            next.insert(next.end(), static_cast<std::size_t>(goods), model.p11);
        }
        return next;
    }

    // Expand breadth-first until saturation or (when depth_limit >= 0) until
    // states deeper than depth_limit would be needed.
    void close(int depth_limit) {
        std::size_t cursor = 0;
        while (cursor < states.size()) {
            const int id = static_cast<int>(cursor++);
            if (depth_limit >= 0 && first_depth[static_cast<std::size_t>(id)] >= depth_limit) continue;
            const std::vector<double> v = states[static_cast<std::size_t>(id)];
            const int d = first_depth[static_cast<std::size_t>(id)];
            for (int l = 0; l <= k; ++l) {
                succ[static_cast<std::size_t>(id)][static_cast<std::size_t>(l)] =
                    intern(successor(v, l), d + 1);
            }
        }
        saturated = true;
        if (depth_limit >= 0) {
            for (std::size_t s = 0; s < states.size(); ++s) {
                if (succ[s][0] == -1) { saturated = false; break; }
            }
        }
    }

    // rounds >= 1 backward steps; returns (V_rounds, V_rounds-1).  V_1 is the
    // immediate reward; V_h = r + beta * sum_l q_l * V_{h-1}(succ_l).  With a
    // depth-limited closure, V_h(s) is only maintained where valid, i.e. for
    // first_depth(s) <= rounds - h; the root (depth 0) is always valid.
    std::pair<std::vector<double>, std::vector<double>> value_iterate(double beta,
                                                                      int rounds) const {
        const std::size_t count = states.size();
        std::vector<double> prev(count, 0.0), cur(rewards);
        if (rounds == 1) return {cur, prev};
        const int workers = std::min<int>(thread_budget(),
                                          static_cast<int>((count + 4095) / 4096));
        for (int h = 2; h <= rounds; ++h) {
            std::swap(prev, cur);
            auto update_range = [&](std::size_t begin, std::size_t end) {
                for (std::size_t s = begin; s < end; ++s) {
                    if (!saturated && first_depth[s] > rounds - h) continue;
                    double future = 0.0;
                    const auto& q = count_probs[s];
                    const auto& ss = succ[s];
                    for (int l = 0; l <= k; ++l) {
                        future += q[static_cast<std::size_t>(l)] *
                                  prev[static_cast<std::size_t>(ss[static_cast<std::size_t>(l)])];
                    }
                    cur[s] = rewards[s] + beta * future;
                }
            };
            if (workers <= 1) {
                update_range(0, count);
            } else {
                std::vector<std::thread> pool;
                pool.reserve(static_cast<std::size_t>(workers));
                const std::size_t chunk = (count + static_cast<std::size_t>(workers) - 1) /
                                          static_cast<std::size_t>(workers);
                for (int w = 0; w < workers; ++w) {
                    const std::size_t b = static_cast<std::size_t>(w) * chunk;
                    const std::size_t e = std::min(count, b + chunk);
                    if (b >= e) break;
                    pool.emplace_back(update_range, b, e);
                }
                for (auto& th : pool) th.join();
            }
        }
        return {cur, prev};
    }
};

int truncation_horizon(int m, double beta, double epsilon) {
    if (!(beta > 0.0 && beta < 1.0)) {
        throw std::invalid_argument("infinite horizon needs 0 < beta < 1");
    }
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
    const double md = static_cast<double>(m);
    auto tail = [&](int T) { return md * std::pow(beta, T) / (1.0 - beta); };
    // closed-form estimate, then adjust to the exact smallest T
    int T = 1;
    if (tail(1) > epsilon) {
        const double est = std::log(epsilon * (1.0 - beta) / md) / std::log(beta);
        T = std::max(1, static_cast<int>(std::ceil(est)) - 2);
        if (T > kMaxTruncationSteps) {
            throw ScaleGuardError("epsilon so small the truncation horizon exceeds the guard");
        }
        while (tail(T) > epsilon) {
            ++T;
            if (T > kMaxTruncationSteps) {
                throw ScaleGuardError("epsilon so small the truncation horizon exceeds the guard");
            }
        }
        while (T > 1 && tail(T - 1) <= epsilon) --T;
    }
    return T;
}

std::vector<double> sorted_desc(const std::vector<double>& v) {
    std::vector<double> out(v);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

HorizonSpec HorizonSpec::finite_horizon(int T, double beta) {
    if (T < 1) throw std::invalid_argument("T must be >= 1");
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must be in [0,1]");
    HorizonSpec h;
    h.finite = true;
    h.T = T;
    h.beta = beta;
    return h;
}

HorizonSpec HorizonSpec::infinite_horizon(double beta, double epsilon) {
    if (!(beta > 0.0 && beta < 1.0)) {
        throw std::invalid_argument("infinite horizon needs 0 < beta < 1");
    }
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
    HorizonSpec h;
    h.finite = false;
    h.T = 0;
    h.beta = beta;
    h.epsilon = epsilon;
    return h;
}

ValueResult evaluate_policy(const ChannelModel& model, const BeliefState& belief,
                            const PolicySpec& spec, const HorizonSpec& horizon) {
    if (!horizon.finite) {
        throw std::invalid_argument("evaluate_policy is finite-horizon; "
                                    "use infinite_value_truncated");
    }
    if (!spec.stepwise()) {
        throw std::invalid_argument("ExhaustiveOptimal cannot be evaluated stepwise; "
                                    "use optimal_value");
    }
    if (spec.k > belief.n()) throw std::invalid_argument("k exceeds the number of channels");
    PolicyEvaluator ev{model, spec, horizon.T, horizon.beta, {}};
    ValueResult out;
    out.value = ev.run(belief, 1);
    out.error_bound = 0.0;
    return out;
}

ValueResult optimal_value(const ChannelModel& model, const BeliefState& belief,
                          int k, int m, const HorizonSpec& horizon,
                          bool override_scale_guard) {
    if (!horizon.finite) {
        throw std::invalid_argument("optimal_value is finite-horizon");
    }
    const int n = belief.n();
    if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, n]");
    if (m < 1 || m > k) throw std::invalid_argument("m must be in [1, k]");
    const double level_width = binomial_coefficient(n, k) * std::pow(2.0, k);
    if (!override_scale_guard && (level_width > 4096.0 || horizon.T > 8)) {
        throw ScaleGuardError("optimal_value desk guard: need C(N,k)*2^k <= 4096 and T <= 8 "
                              "(pass override to force)");
    }

    struct Optimizer {
        const ChannelModel& model;
        int n, k, m, T;
        double beta;
        std::unordered_map<std::string, double> memo;

        double best_over_actions(const BeliefState& b, int t,
                                 std::vector<std::pair<Action, double>>* per_action) {
            double best = -std::numeric_limits<double>::infinity();
            std::vector<int> idx(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
            SensingOutcome outcome(static_cast<std::size_t>(k), 0);
            do {
                const Action action(idx, n);
                double v = expected_reward(b, action, m);
                if (t < T) {
                    for (unsigned bits = 0; bits < (1u << k); ++bits) {
                        for (int i = 0; i < k; ++i) {
                            outcome[static_cast<std::size_t>(i)] = (bits >> i) & 1u;
                        }
                        const double p = outcome_probability(b, action, outcome);
                        if (p == 0.0) continue;
                        const BeliefState next = transition_belief(model, b, action, outcome);
                        v += beta * p * value(next, t + 1);
                    }
                }
                if (per_action) per_action->emplace_back(action, v);
                best = std::max(best, v);
            } while (next_combination(idx, n));
            return best;
        }

        double value(const BeliefState& b, int t) {
            const std::string key = belief_key(b.omegas, t);
            if (auto it = memo.find(key); it != memo.end()) return it->second;
            if (static_cast<long long>(memo.size()) >= kMaxMemoNodes) {
                throw ScaleGuardError("optimal_value exceeded the node guard");
            }
            const double v = best_over_actions(b, t, nullptr);
            memo.emplace(key, v);
            return v;
        }
    };

    Optimizer opt{model, n, k, m, horizon.T, horizon.beta, {}};
    std::vector<std::pair<Action, double>> per_action;
    const double best = opt.best_over_actions(belief, 1, &per_action);
    ValueResult out;
    out.value = best;
    out.error_bound = 0.0;
    for (auto& [action, v] : per_action) {
        if (v >= best - 1e-9) out.first_actions.push_back(action);
    }
    return out;
}

double w_value(const ChannelModel& model, const std::vector<double>& ordered,
               int k, int m, double beta, int T) {
    if (T < 1) throw std::invalid_argument("T must be >= 1");
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must be in [0,1]");
    for (double w : ordered) {
        if (!(w >= -1e-12 && w <= 1.0 + 1e-12)) {
            throw std::invalid_argument("belief coordinate outside [0,1]");
        }
    }
    WEngine eng(model, static_cast<int>(ordered.size()), k, m);
    const int root = eng.intern(ordered, 0);
    eng.close(T - 1);
    auto [cur, prev] = eng.value_iterate(beta, T);
    (void)prev;
    return cur[static_cast<std::size_t>(root)];
}

ValueResult infinite_value_truncated(const ChannelModel& model, const BeliefState& belief,
                                     const PolicySpec& spec, double beta, double epsilon) {
    if (!spec.stepwise()) {
        throw std::invalid_argument("ExhaustiveOptimal cannot be evaluated stepwise");
    }
    if (spec.k > belief.n()) throw std::invalid_argument("k exceeds the number of channels");
    const int T = truncation_horizon(spec.m, beta, epsilon);
    const double tail = static_cast<double>(spec.m) * std::pow(beta, T) / (1.0 - beta);
    ValueResult out;
    out.error_bound = tail;

    const int n = belief.n();
    if (spec.kind == PolicyKind::Myopic || spec.kind == PolicyKind::FixedFirstThenMyopic) {
        // Route through the W-engine: after the (possibly forced) first step
        // the policy is myopic, i.e. the W recursion on the sorted belief.
        WEngine eng(model, n, spec.k, spec.m);
        if (spec.kind == PolicyKind::Myopic) {
            const int root = eng.intern(sorted_desc(belief.omegas), 0);
            eng.close(T - 1);
            auto [cur, prev] = eng.value_iterate(beta, T);
            (void)prev;
            out.value = cur[static_cast<std::size_t>(root)];
            return out;
        }
        const Action first(*spec.first_action, n);
        std::vector<double> sensed;
        sensed.reserve(static_cast<std::size_t>(spec.k));
        for (int c : first.channels) sensed.push_back(belief.omegas[static_cast<std::size_t>(c)]);
        const double r = expected_reward(sensed, spec.m);
        if (T == 1) {
            out.value = r;
            return out;
        }
        // successors of the forced first step, count-coalesced and sorted
        std::vector<int> roots(static_cast<std::size_t>(spec.k) + 1, -1);
        for (int l = 0; l <= spec.k; ++l) {
            std::vector<double> next;
            next.reserve(static_cast<std::size_t>(n));
            next.insert(next.end(), static_cast<std::size_t>(l), model.p11);
            next.insert(next.end(), static_cast<std::size_t>(spec.k - l), model.p01);
            for (int c = 0; c < n; ++c) {
                if (std::find(first.channels.begin(), first.channels.end(), c) ==
                    first.channels.end()) {
                    next.push_back(tau(model, belief.omegas[static_cast<std::size_t>(c)]));
                }
            }
            std::sort(next.begin(), next.end(), std::greater<>());
            roots[static_cast<std::size_t>(l)] = eng.intern(next, 0);
        }
        eng.close(T - 2);
        auto [cur, prev] = eng.value_iterate(beta, T - 1);
        (void)prev;
        const auto q = success_count_distribution(sensed);
        double future = 0.0;
        for (int l = 0; l <= spec.k; ++l) {
            future += q[static_cast<std::size_t>(l)] *
                      cur[static_cast<std::size_t>(roots[static_cast<std::size_t>(l)])];
        }
        out.value = r + beta * future;
        return out;
    }

    // Random policies get the literal outcome recursion; the node guard
    // decides whether the derived horizon is feasible.
    out.value = evaluate_policy(model, belief, spec, HorizonSpec::finite_horizon(T, beta)).value;
    return out;
}

std::vector<BeliefState> belief_lattice(const ChannelModel& model, int n, int depth) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    std::vector<double> vals;
    for (double x : {model.p01, model.p11}) {
        double w = x;
        for (int j = 0; j <= depth; ++j) {
            vals.push_back(w);
            w = tau(model, w);
        }
    }
    std::sort(vals.begin(), vals.end(), std::greater<>());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

    // all nonincreasing n-vectors over vals = multisets, by nondecreasing
    // index tuples into the descending value list
    std::vector<BeliefState> lattice;
    std::vector<int> at(static_cast<std::size_t>(n), 0);
    const int v = static_cast<int>(vals.size());
    while (true) {
        std::vector<double> b;
        b.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) b.push_back(vals[static_cast<std::size_t>(at[static_cast<std::size_t>(i)])]);
        lattice.emplace_back(std::move(b));
        int i = n - 1;
        for (; i >= 0; --i) {
            if (at[static_cast<std::size_t>(i)] + 1 < v) {
                const int nv = at[static_cast<std::size_t>(i)] + 1;
                for (int j = i; j < n; ++j) at[static_cast<std::size_t>(j)] = nv;
                break;
            }
        }
        if (i < 0) break;
    }
    return lattice;
}

DeviationReport deviation_audit(const ChannelModel& model, int n, int k, int m,
                                double beta, double epsilon, int belief_grid_depth) {
    if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, n]");
    if (m < 1 || m > k) throw std::invalid_argument("m must be in [1, k]");
    const int T = truncation_horizon(m, beta, epsilon);
    const double tail = static_cast<double>(m) * std::pow(beta, T) / (1.0 - beta);
    const double threshold = 2.0 * tail + 1e-9;

    const std::vector<BeliefState> lattice = belief_lattice(model, n, belief_grid_depth);

    // Every deviation's first-step successors join the seed set, so one
    // closure + one value iteration serves the whole audit.
    WEngine eng(model, n, k, m);
    std::vector<int> lattice_ids;
    lattice_ids.reserve(lattice.size());
    for (const auto& b : lattice) lattice_ids.push_back(eng.intern(b.omegas, 0));

    std::vector<int> idx(static_cast<std::size_t>(k));
    struct Deviation {
        int belief_pos;
        std::vector<int> action;       // positions into the (sorted) belief
        std::vector<double> probs;     // k+1 count weights
        std::vector<int> succ_ids;     // k+1 successors
        double immediate;
    };
    std::vector<Deviation> deviations;
    for (std::size_t bi = 0; bi < lattice.size(); ++bi) {
        const auto& omega = lattice[bi].omegas;
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        do {
            // positions 0..k-1 on a sorted vector are the myopic choice
            bool is_myopic = true;
            for (int i = 0; i < k; ++i) is_myopic &= idx[static_cast<std::size_t>(i)] == i;
            if (is_myopic) continue;
            Deviation d;
            d.belief_pos = static_cast<int>(bi);
            d.action = idx;
            std::vector<double> sensed;
            sensed.reserve(static_cast<std::size_t>(k));
            for (int i : idx) sensed.push_back(omega[static_cast<std::size_t>(i)]);
            d.immediate = expected_reward(sensed, m);
            d.probs = success_count_distribution(sensed);
            d.succ_ids.assign(static_cast<std::size_t>(k) + 1, -1);
            for (int l = 0; l <= k; ++l) {
                std::vector<double> next;
                next.reserve(omega.size());
                next.insert(next.end(), static_cast<std::size_t>(l), model.p11);
                next.insert(next.end(), static_cast<std::size_t>(k - l), model.p01);
                for (int c = 0; c < n; ++c) {
                    if (std::find(idx.begin(), idx.end(), c) == idx.end()) {
                        next.push_back(tau(model, omega[static_cast<std::size_t>(c)]));
                    }
                }
                std::sort(next.begin(), next.end(), std::greater<>());
                d.succ_ids[static_cast<std::size_t>(l)] = eng.intern(next, 0);
            }
            deviations.push_back(std::move(d));
        } while (next_combination(idx, n));
    }

    eng.close(T - 1);
    auto [v_final, v_prev] = eng.value_iterate(beta, T);

    DeviationReport report;
    report.beliefs_audited = static_cast<long long>(lattice.size());
    report.gain = -std::numeric_limits<double>::infinity();
    for (const auto& d : deviations) {
        const double myopic = v_final[static_cast<std::size_t>(
            lattice_ids[static_cast<std::size_t>(d.belief_pos)])];
        double future = 0.0;
        for (int l = 0; l <= k; ++l) {
            future += d.probs[static_cast<std::size_t>(l)] *
                      (T == 1 ? 0.0
                              : v_prev[static_cast<std::size_t>(d.succ_ids[static_cast<std::size_t>(l)])]);
        }
        const double gain = d.immediate + beta * future - myopic;
        if (gain > report.gain) {
            report.gain = gain;
            report.witness_belief = lattice[static_cast<std::size_t>(d.belief_pos)];
            report.witness_action = Action(d.action, n);
        }
    }
    if (deviations.empty()) {
        report.gain = 0.0;  // k = n: the only action is the myopic one
    }
    report.profitable_found = report.gain > threshold;
    if (!report.profitable_found) {
        // keep the best (non-profitable) gain for diagnostics, but report no witness
        report.witness_belief.reset();
        report.witness_action.reset();
    }
    return report;
}

DeviationReport finite_deviation_audit(const ChannelModel& model, int k, int m,
                                       double beta, int T,
                                       const std::vector<BeliefState>& beliefs) {
    if (beliefs.empty()) throw std::invalid_argument("need at least one candidate belief");
    constexpr double kThreshold = 1e-9;
    const HorizonSpec horizon = HorizonSpec::finite_horizon(T, beta);
    DeviationReport report;
    report.beliefs_audited = static_cast<long long>(beliefs.size());
    report.gain = -std::numeric_limits<double>::infinity();
    bool any_deviation = false;
    for (const auto& belief : beliefs) {
        const int n = belief.n();
        if (k > n) throw std::invalid_argument("k exceeds a candidate belief's size");
        const double myopic =
            evaluate_policy(model, belief, PolicySpec::myopic(k, m), horizon).value;
        const Action greedy = myopic_action(belief, k);
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        do {
            if (idx == greedy.channels) continue;
            any_deviation = true;
            const double v =
                evaluate_policy(model, belief, PolicySpec::fixed_first(idx, k, m), horizon).value;
            const double gain = v - myopic;
            if (gain > report.gain) {
                report.gain = gain;
                report.witness_belief = belief;
                report.witness_action = Action(idx, n);
            }
        } while (next_combination(idx, belief.n()));
    }
    if (!any_deviation) report.gain = 0.0;
    report.profitable_found = report.gain > kThreshold;
    if (!report.profitable_found) {
        report.witness_belief.reset();
        report.witness_action.reset();
    }
    return report;
}

}  // namespace osa
