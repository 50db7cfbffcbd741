#ifndef CTRUST_LATTICE_HPP
#define CTRUST_LATTICE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ctrust/model.hpp"

namespace ctrust {

enum class DominanceRelation { StrictlyBetter, StrictlyWorse, Equal, Incomparable };

/// Componentwise dominance of a over b. StrictlyBetter iff a >= b in every
/// component with at least one strict.
DominanceRelation compare(const AttributeVector& a, const AttributeVector& b);

/// Dominance partial order over a group of agents. Agents are addressed by
/// their dense ids (0..n-1).
struct PartialOrder {
    std::size_t n = 0;
    // Hasse edges, dominator -> dominated (transitive reduction of strict
    // dominance).
    std::vector<std::pair<int, int>> cover_edges;
    // 1 for maximal agents, otherwise 1 + max rank over strict dominators.
    std::vector<int> depth_rank;
    AttributeVector meet; // componentwise min over all agents
    AttributeVector join; // componentwise max over all agents

    // Full precedence used for linear-extension enumeration: strict
    // dominance, plus ascending-id ordering within groups of agents with
    // exactly equal attribute vectors (deterministic tie break).
    std::vector<std::vector<bool>> precedes;

    bool strictly_dominates(int a, int b) const;
};

/// Permutation of agent ids, most expert first.
struct TotalOrder {
    std::vector<int> sequence;

    std::size_t size() const { return sequence.size(); }
};

PartialOrder build_partial_order(const std::vector<AutonomousSystem>& systems);

/// (join, meet): componentwise max and min over all agents.
std::pair<AttributeVector, AttributeVector>
join_meet(const std::vector<AutonomousSystem>& systems);

/// Up to `limit` linear extensions in lexicographic-by-id order.
std::vector<TotalOrder> linear_extensions(const PartialOrder& po, std::size_t limit);

/// Quality-sorted linear extension: agents by descending mean attribute
/// value, ties by ascending id. Used as the default propagation order.
TotalOrder default_order(const std::vector<AutonomousSystem>& systems);

} // namespace ctrust

#endif
