#include "ctrust/propagation.hpp"

namespace ctrust {

PropagationTrace propagate_chain(const TotalOrder& order,
                                 const std::vector<bool>& raw,
                                 const RuleSpec& rule) {
    const std::size_t n = order.size();
    if (n == 0)
        throw EmptyInput("cannot propagate over an empty order");
    if (raw.size() != n)
        throw LengthMismatch("raw beliefs do not match order length");

    PropagationTrace trace;
    trace.order = order;
    trace.raw = raw;
    trace.aggregated.resize(n);

    switch (rule.kind) {
        case RuleSpec::Kind::MostExpert:
        case RuleSpec::Kind::NExpert: {
            const std::size_t k = static_cast<std::size_t>(rule.expert_k());
            for (std::size_t i = 0; i < n; ++i) {
                if (i < k) {
                    trace.aggregated[i] = raw[i]; // base case keeps raw
                    continue;
                }
                auto group = group_of_interest(rule, order, i);
                std::vector<bool> inputs;
                inputs.reserve(group.member_positions.size());
                for (std::size_t pos : group.member_positions)
                    inputs.push_back(trace.aggregated[pos]);
                trace.aggregated[i] = combine_unanimous_flip(raw[i], inputs);
            }
            // smallest c with k equal aggregated values right before it
            for (std::size_t c = k; c <= n; ++c) {
                bool all_equal = true;
                for (std::size_t j = c - k + 1; j < c && all_equal; ++j)
                    all_equal = trace.aggregated[j] == trace.aggregated[c - k];
                if (all_equal) {
                    trace.convergence_index = c;
                    break;
                }
            }
            break;
        }
        case RuleSpec::Kind::Majority: {
            // synchronous vote over raw beliefs, order-independent
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<bool> inputs;
                inputs.reserve(n - 1);
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i) inputs.push_back(raw[j]);
                trace.aggregated[i] = combine_majority(raw[i], inputs);
            }
            break;
        }
        case RuleSpec::Kind::GravityPoint:
            for (std::size_t i = 0; i < n; ++i)
                trace.aggregated[i] = gravity_decide(order, raw, i);
            break;
    }
    return trace;
}

AggregatedConfiguration propagate_all(const Scenario& scenario,
                                      std::size_t config_index,
                                      const TotalOrder& order,
                                      const RuleSpec& rule) {
    if (config_index >= scenario.configurations.size())
        throw IndexOutOfRange("configuration index out of range");
    const BeliefMatrix& x = scenario.configurations[config_index];
    const std::size_t n = x.systems();
    const std::size_t m = x.predicates();

    AggregatedConfiguration result;
    result.y = BeliefMatrix(n, m, BeliefRole::Aggregated);
    result.traces.reserve(m);
    for (std::size_t p = 0; p < m; ++p) {
        std::vector<bool> raw(n);
        for (std::size_t pos = 0; pos < n; ++pos)
            raw[pos] = x.at(order.sequence[pos], p);
        PropagationTrace trace = propagate_chain(order, raw, rule);
        trace.predicate_id = static_cast<int>(p);
        for (std::size_t pos = 0; pos < n; ++pos)
            result.y.set(order.sequence[pos], p, trace.aggregated[pos]);
        result.traces.push_back(std::move(trace));
    }
    return result;
}

bool detect_peer_disagreement(const BeliefMatrix& beliefs, std::size_t predicate_id) {
    if (predicate_id >= beliefs.predicates())
        throw IndexOutOfRange("predicate id out of range");
    for (std::size_t i = 1; i < beliefs.systems(); ++i)
        if (beliefs.at(i, predicate_id) != beliefs.at(0, predicate_id))
            return true;
    return false;
}

} // namespace ctrust
