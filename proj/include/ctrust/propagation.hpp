#ifndef CTRUST_PROPAGATION_HPP
#define CTRUST_PROPAGATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ctrust/model.hpp"
#include "ctrust/rules.hpp"

namespace ctrust {

/// One propagation pass along a total order for a single predicate.
/// raw and aggregated are indexed by order position, not agent id.
struct PropagationTrace {
    TotalOrder order;
    int predicate_id = 0;
    std::vector<bool> raw;
    std::vector<bool> aggregated;
    // Smallest c in [k, n] such that positions [c-k, c-1] hold k equal
    // aggregated values. Expert rules only.
    std::optional<std::size_t> convergence_index;
};

PropagationTrace propagate_chain(const TotalOrder& order,
                                 const std::vector<bool>& raw,
                                 const RuleSpec& rule);

struct AggregatedConfiguration {
    BeliefMatrix y; // role Aggregated, indexed by agent id
    std::vector<PropagationTrace> traces; // one per predicate
};

AggregatedConfiguration propagate_all(const Scenario& scenario,
                                      std::size_t config_index,
                                      const TotalOrder& order,
                                      const RuleSpec& rule);

/// True iff two agents hold differing beliefs on the predicate.
bool detect_peer_disagreement(const BeliefMatrix& beliefs, std::size_t predicate_id);

} // namespace ctrust

#endif
