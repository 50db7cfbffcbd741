#ifndef CTRUST_RULES_HPP
#define CTRUST_RULES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ctrust/lattice.hpp"

namespace ctrust {

/// Aggregation rule selection. MostExpert is behaviorally NExpert(1).
struct RuleSpec {
    enum class Kind { MostExpert, NExpert, Majority, GravityPoint };

    Kind kind = Kind::NExpert;
    int k = 1; // group size for the expert family

    static RuleSpec most_expert() { return {Kind::MostExpert, 1}; }
    static RuleSpec n_expert(int k);
    static RuleSpec majority() { return {Kind::Majority, 0}; }
    static RuleSpec gravity_point() { return {Kind::GravityPoint, 0}; }

    bool is_expert_family() const {
        return kind == Kind::MostExpert || kind == Kind::NExpert;
    }
    /// Window width for the expert family (1 for MostExpert).
    int expert_k() const { return kind == Kind::MostExpert ? 1 : k; }

    /// CLI name: most-expert, n-expert:K, majority, gravity-point.
    std::string name() const;
    static RuleSpec parse(const std::string& name);
};

/// Positions in a TotalOrder contributing beliefs to position i.
struct GroupOfInterest {
    std::vector<std::size_t> member_positions;
};

GroupOfInterest group_of_interest(const RuleSpec& rule, const TotalOrder& order,
                                  std::size_t i);

/// Flip own belief iff inputs is nonempty and every input disagrees.
bool combine_unanimous_flip(bool own, const std::vector<bool>& inputs);

/// Strict majority over inputs plus own; tie keeps own.
bool combine_majority(bool own, const std::vector<bool>& inputs);

/// Gravity-point resolution for position i: start from the nearest
/// predecessor/successor pair, flip on unanimous disagreement, adopt a
/// strict member majority, otherwise expand symmetrically; keep own when
/// the group exhausts without a strict majority.
bool gravity_decide(const TotalOrder& order, const std::vector<bool>& raw,
                    std::size_t i);

} // namespace ctrust

#endif
