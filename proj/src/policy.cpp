#include "osa/policy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "osa/rng.hpp"

namespace osa {

PolicySpec PolicySpec::myopic(int k, int m) {
    if (k < 1 || m < 1 || m > k) throw std::invalid_argument("need 1 <= m <= k");
    return PolicySpec{PolicyKind::Myopic, k, m, std::nullopt, std::nullopt};
}

PolicySpec PolicySpec::fixed_first(std::vector<int> action, int k, int m) {
    if (k < 1 || m < 1 || m > k) throw std::invalid_argument("need 1 <= m <= k");
    if (static_cast<int>(action.size()) != k) {
        throw std::invalid_argument("first_action must have exactly k channels");
    }
    return PolicySpec{PolicyKind::FixedFirstThenMyopic, k, m, std::move(action), std::nullopt};
}

PolicySpec PolicySpec::random(std::uint64_t seed, int k, int m) {
    if (k < 1 || m < 1 || m > k) throw std::invalid_argument("need 1 <= m <= k");
    return PolicySpec{PolicyKind::Random, k, m, std::nullopt, seed};
}

PolicySpec PolicySpec::optimal(int k, int m) {
    if (k < 1 || m < 1 || m > k) throw std::invalid_argument("need 1 <= m <= k");
    return PolicySpec{PolicyKind::ExhaustiveOptimal, k, m, std::nullopt, std::nullopt};
}

Action myopic_action(const BeliefState& belief, int k) {
    const int n = belief.n();
    if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, n]");
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    // stable sort by descending belief keeps equal beliefs in index order,
    // which is exactly the lowest-index tie-break.
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return belief.omegas[static_cast<std::size_t>(a)] > belief.omegas[static_cast<std::size_t>(b)];
    });
    idx.resize(static_cast<std::size_t>(k));
    return Action(std::move(idx), n);
}

Action policy_action(const PolicySpec& spec, const BeliefState& belief, int t) {
    if (t < 1) throw std::invalid_argument("t is 1-based");
    switch (spec.kind) {
        case PolicyKind::Myopic:
            return myopic_action(belief, spec.k);
        case PolicyKind::FixedFirstThenMyopic:
            if (t == 1) {
                if (!spec.first_action) throw std::invalid_argument("missing first_action");
                return Action(*spec.first_action, belief.n());
            }
            return myopic_action(belief, spec.k);
        case PolicyKind::Random: {
            if (!spec.seed) throw std::invalid_argument("random policy needs a seed");
            // Seeded per (seed, t): the whole action sequence is a pure
            // function of the PolicySpec, so DP evaluation and simulation
            // see the same actions.
            std::mt19937_64 rng(mix_seed(*spec.seed, static_cast<std::uint64_t>(t)));
            return Action(random_subset(rng, belief.n(), spec.k), belief.n());
        }
        case PolicyKind::ExhaustiveOptimal:
            throw std::invalid_argument("ExhaustiveOptimal is not a stepwise policy");
    }
    throw std::logic_error("unreachable");
}

OrderedBelief OrderedBelief::from_belief(const BeliefState& belief) {
    OrderedBelief ob;
    ob.channels.resize(static_cast<std::size_t>(belief.n()));
    std::iota(ob.channels.begin(), ob.channels.end(), 0);
    std::stable_sort(ob.channels.begin(), ob.channels.end(), [&](int a, int b) {
        return belief.omegas[static_cast<std::size_t>(a)] > belief.omegas[static_cast<std::size_t>(b)];
    });
    ob.values.reserve(ob.channels.size());
    for (int c : ob.channels) ob.values.push_back(belief.omegas[static_cast<std::size_t>(c)]);
    return ob;
}

OrderedBelief advance_order(const ChannelModel& model, const OrderedBelief& ordered,
                            const SensingOutcome& outcome) {
    const std::size_t k = outcome.size();
    const std::size_t n = ordered.values.size();
    if (k < 1 || k > n) throw std::invalid_argument("outcome size must be in [1, n]");
    OrderedBelief next;
    next.values.reserve(n);
    next.channels.reserve(n);
    auto push_sensed = [&](int want) {
        for (std::size_t i = 0; i < k; ++i) {
            if (outcome[i] != 0 && outcome[i] != 1) {
                throw std::invalid_argument("outcome entries must be 0 or 1");
            }
            if (outcome[i] == want) {
                next.values.push_back(want ? model.p11 : model.p01);
                next.channels.push_back(ordered.channels[i]);
            }
        }
    };
    auto push_unsensed = [&](bool reversed) {
        if (!reversed) {
            for (std::size_t i = k; i < n; ++i) {
                next.values.push_back(tau(model, ordered.values[i]));
                next.channels.push_back(ordered.channels[i]);
            }
        } else {
            for (std::size_t i = n; i-- > k;) {
                next.values.push_back(tau(model, ordered.values[i]));
                next.channels.push_back(ordered.channels[i]);
            }
        }
    };
    if (model.positive()) {
        push_sensed(1);        // good -> p11, the top of the range
        push_unsensed(false);  // tau keeps their order
        push_sensed(0);        // bad -> p01, the bottom
    } else {
        push_sensed(0);        // bad -> p01, now the top of the range
        push_unsensed(true);   // tau reverses the order
        push_sensed(1);        // good -> p11, the bottom
    }
    // Equal values carry no ordering information, so put tied channels in
    // ascending index order; "take the first k" then realizes the same
    // lowest-index tie-break as myopic_action on the plain belief.
    for (std::size_t run = 0; run < n;) {
        std::size_t end = run + 1;
        while (end < n && next.values[end] == next.values[run]) ++end;
        std::sort(next.channels.begin() + static_cast<std::ptrdiff_t>(run),
                  next.channels.begin() + static_cast<std::ptrdiff_t>(end));
        run = end;
    }
    return next;
}

}  // namespace osa
