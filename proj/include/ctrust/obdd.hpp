#ifndef CTRUST_OBDD_HPP
#define CTRUST_OBDD_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ctrust/rules.hpp"

namespace ctrust::obdd {

using NodeId = std::uint32_t;

/// Terminal (var < 0, lo holds the value) or decision node. lo is the
/// 0-assignment child, hi the 1-assignment child.
struct Node {
    int var = -1;
    NodeId lo = 0;
    NodeId hi = 0;

    bool is_terminal() const { return var < 0; }
    bool terminal_value() const { return lo != 0; }
};

/// Ordered decision diagram over position-indexed belief variables.
class Diagram {
public:
    Diagram() = default;
    Diagram(std::vector<Node> nodes, NodeId root, TotalOrder order)
        : nodes_(std::move(nodes)), root_(root), order_(std::move(order)) {}

    const Node& node(NodeId id) const { return nodes_.at(id); }
    NodeId root() const { return root_; }
    const TotalOrder& order() const { return order_; }
    std::size_t node_count() const;
    std::size_t arena_size() const { return nodes_.size(); }

private:
    std::vector<Node> nodes_;
    NodeId root_ = 0;
    TotalOrder order_;
};

/// Complete binary decision tree over n variables, 2^(n+1) - 1 nodes.
/// Leaf values come from `leaf` applied to the path assignment; the
/// default labels each leaf with the last variable's value.
Diagram build_unreduced(std::size_t n);
Diagram build_unreduced(std::size_t n,
                        const std::function<bool(const std::vector<bool>&)>& leaf);

/// Diagram of the final aggregated group belief as a function of the raw
/// beliefs, built by Shannon expansion with the aggregation window as
/// path-local state. Expert-family rules only.
Diagram build_propagated(const TotalOrder& order, const RuleSpec& rule);

/// Canonical reduction: single terminals, merged isomorphic decision
/// nodes, redundant tests elided.
Diagram reduce(const Diagram& d);

bool evaluate(const Diagram& d, const std::vector<bool>& assignment);

std::string to_dot(const Diagram& d);

} // namespace ctrust::obdd

#endif
