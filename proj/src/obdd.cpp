#include "ctrust/obdd.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "ctrust/propagation.hpp"

namespace ctrust::obdd {

std::size_t Diagram::node_count() const {
    if (nodes_.empty()) return 0;
    std::vector<bool> seen(nodes_.size(), false);
    std::vector<NodeId> stack{root_};
    seen[root_] = true;
    std::size_t count = 0;
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        ++count;
        const Node& nd = nodes_[id];
        if (nd.is_terminal()) continue;
        for (NodeId child : {nd.lo, nd.hi})
            if (!seen[child]) {
                seen[child] = true;
                stack.push_back(child);
            }
    }
    return count;
}

namespace {

TotalOrder identity_order(std::size_t n) {
    TotalOrder order;
    order.sequence.resize(n);
    std::iota(order.sequence.begin(), order.sequence.end(), 0);
    return order;
}

} // namespace

Diagram build_unreduced(std::size_t n,
                        const std::function<bool(const std::vector<bool>&)>& leaf) {
    if (n == 0) throw EmptyInput("diagram needs at least one variable");
    if (n > 24) throw TooLarge("unreduced diagram limited to 24 variables");

    std::vector<Node> nodes;
    nodes.reserve((std::size_t{2} << n) - 1);
    std::vector<bool> path(n, false);

    std::function<NodeId(std::size_t)> rec = [&](std::size_t var) -> NodeId {
        if (var == n) {
            nodes.push_back(Node{-1, leaf(path) ? NodeId{1} : NodeId{0}, 0});
            return static_cast<NodeId>(nodes.size() - 1);
        }
        path[var] = false;
        NodeId lo = rec(var + 1);
        path[var] = true;
        NodeId hi = rec(var + 1);
        nodes.push_back(Node{static_cast<int>(var), lo, hi});
        return static_cast<NodeId>(nodes.size() - 1);
    };
    NodeId root = rec(0);
    return Diagram(std::move(nodes), root, identity_order(n));
}

Diagram build_unreduced(std::size_t n) {
    // terminals carry the belief of the last system on the path
    return build_unreduced(n, [](const std::vector<bool>& path) { return path.back(); });
}

Diagram build_propagated(const TotalOrder& order, const RuleSpec& rule) {
    if (!rule.is_expert_family())
        throw UnsupportedRule("propagated diagrams exist for the expert family only");
    const std::size_t n = order.size();
    if (n == 0) throw EmptyInput("diagram needs at least one variable");
    const std::size_t k = static_cast<std::size_t>(rule.expert_k());

    std::vector<Node> nodes;
    // memo key: variable plus the window of up to k trailing aggregated
    // beliefs along the path (length-tagged bitmask)
    std::map<std::pair<std::size_t, std::uint64_t>, NodeId> memo;

    auto window_key = [&](const std::vector<bool>& window) {
        std::uint64_t key = 1;
        for (bool b : window) key = (key << 1) | (b ? 1 : 0);
        return key;
    };

    std::function<NodeId(std::size_t, std::vector<bool>&)> rec =
        [&](std::size_t var, std::vector<bool>& window) -> NodeId {
        if (var == n) {
            nodes.push_back(Node{-1, window.back() ? NodeId{1} : NodeId{0}, 0});
            return static_cast<NodeId>(nodes.size() - 1);
        }
        auto key = std::make_pair(var, window_key(window));
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        NodeId child[2];
        for (int bit = 0; bit < 2; ++bit) {
            const bool own = bit == 1;
            bool aggregated;
            if (var < k) {
                aggregated = own;
            } else {
                std::vector<bool> inputs(window.begin(), window.end());
                aggregated = combine_unanimous_flip(own, inputs);
            }
            std::vector<bool> next = window;
            next.push_back(aggregated);
            if (next.size() > k) next.erase(next.begin());
            child[bit] = rec(var + 1, next);
        }
        nodes.push_back(Node{static_cast<int>(var), child[0], child[1]});
        NodeId id = static_cast<NodeId>(nodes.size() - 1);
        memo.emplace(key, id);
        return id;
    };

    std::vector<bool> empty_window;
    NodeId root = rec(0, empty_window);
    return Diagram(std::move(nodes), root, order);
}

Diagram reduce(const Diagram& d) {
    std::vector<Node> out;
    NodeId terminal[2] = {0, 0};
    bool have_terminal[2] = {false, false};
    std::unordered_map<std::uint64_t, NodeId> unique;
    std::unordered_map<NodeId, NodeId> canon;

    std::function<NodeId(NodeId)> walk = [&](NodeId id) -> NodeId {
        if (auto it = canon.find(id); it != canon.end()) return it->second;
        const Node& nd = d.node(id);
        NodeId result;
        if (nd.is_terminal()) {
            int v = nd.terminal_value() ? 1 : 0;
            if (!have_terminal[v]) {
                out.push_back(Node{-1, static_cast<NodeId>(v), 0});
                terminal[v] = static_cast<NodeId>(out.size() - 1);
                have_terminal[v] = true;
            }
            result = terminal[v];
        } else {
            NodeId lo = walk(nd.lo);
            NodeId hi = walk(nd.hi);
            if (lo == hi) {
                result = lo; // redundant test
            } else {
                // arena guard keeps ids below 2^29
                std::uint64_t key = (static_cast<std::uint64_t>(nd.var) << 58) |
                                    (static_cast<std::uint64_t>(lo) << 29) | hi;
                if (auto it = unique.find(key); it != unique.end()) {
                    result = it->second;
                } else {
                    out.push_back(Node{nd.var, lo, hi});
                    result = static_cast<NodeId>(out.size() - 1);
                    unique.emplace(key, result);
                }
            }
        }
        canon.emplace(id, result);
        return result;
    };

    NodeId root = walk(d.root());
    return Diagram(std::move(out), root, d.order());
}

bool evaluate(const Diagram& d, const std::vector<bool>& assignment) {
    NodeId id = d.root();
    while (true) {
        const Node& nd = d.node(id);
        if (nd.is_terminal()) return nd.terminal_value();
        if (static_cast<std::size_t>(nd.var) >= assignment.size())
            throw AssignmentTooShort("assignment shorter than diagram variables");
        id = assignment[nd.var] ? nd.hi : nd.lo;
    }
}

std::string to_dot(const Diagram& d) {
    std::ostringstream os;
    os << "digraph obdd {\n";
    std::vector<bool> seen(d.arena_size(), false);
    std::vector<NodeId> stack{d.root()};
    seen[d.root()] = true;
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        const Node& nd = d.node(id);
        if (nd.is_terminal()) {
            os << "  n" << id << " [shape=box,label=\"" << (nd.terminal_value() ? 1 : 0)
               << "\"];\n";
            continue;
        }
        int agent = d.order().sequence.at(nd.var);
        os << "  n" << id << " [label=\"x" << agent << "\"];\n";
        os << "  n" << id << " -> n" << nd.lo << " [style=dashed];\n";
        os << "  n" << id << " -> n" << nd.hi << ";\n";
        for (NodeId child : {nd.lo, nd.hi})
            if (!seen[child]) {
                seen[child] = true;
                stack.push_back(child);
            }
    }
    os << "}\n";
    return os.str();
}

} // namespace ctrust::obdd
