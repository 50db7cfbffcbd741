#ifndef CTRUST_MODEL_HPP
#define CTRUST_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ctrust/errors.hpp"

namespace ctrust {

/// Environment knowledge predicate, e.g. "crosswalk is free".
struct Predicate {
    int id = 0;
    std::string label;
};

/// d-dimensional vector of quality percentages, each in [0, 100].
struct AttributeVector {
    std::vector<double> values;

    std::size_t dim() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

struct AutonomousSystem {
    int id = 0;
    AttributeVector attributes;
    // Per-agent knowledge sphere (subset of predicate ids). Reserved:
    // every agent currently knows the full predicate set.
    std::vector<int> knowledge_sphere;
};

/// Total truth assignment over the scenario's predicates.
struct GroundTruth {
    std::vector<bool> assignment;

    bool at(std::size_t predicate) const { return assignment.at(predicate); }
    std::size_t size() const { return assignment.size(); }
};

enum class BeliefRole { Raw, Aggregated };

/// Dense boolean matrix of beliefs, systems x predicates.
class BeliefMatrix {
public:
    BeliefMatrix() = default;
    BeliefMatrix(std::size_t n_systems, std::size_t n_predicates, BeliefRole role)
        : n_systems_(n_systems),
          n_predicates_(n_predicates),
          role_(role),
          bits_(n_systems * n_predicates, 0) {}

    std::size_t systems() const { return n_systems_; }
    std::size_t predicates() const { return n_predicates_; }
    BeliefRole role() const { return role_; }

    bool at(std::size_t system, std::size_t predicate) const {
        check(system, predicate);
        return bits_[system * n_predicates_ + predicate] != 0;
    }
    void set(std::size_t system, std::size_t predicate, bool value) {
        check(system, predicate);
        bits_[system * n_predicates_ + predicate] = value ? 1 : 0;
    }

    bool operator==(const BeliefMatrix& other) const {
        return n_systems_ == other.n_systems_ && n_predicates_ == other.n_predicates_ &&
               role_ == other.role_ && bits_ == other.bits_;
    }

private:
    void check(std::size_t system, std::size_t predicate) const {
        if (system >= n_systems_ || predicate >= n_predicates_)
            throw IndexOutOfRange("belief matrix index out of range");
    }

    std::size_t n_systems_ = 0;
    std::size_t n_predicates_ = 0;
    BeliefRole role_ = BeliefRole::Raw;
    std::vector<std::uint8_t> bits_;
};

/// One experiment: a group of systems, predicates, the ground truth and
/// one or more raw belief configurations.
struct Scenario {
    std::vector<AutonomousSystem> systems;
    std::vector<Predicate> predicates;
    GroundTruth truth;
    std::vector<BeliefMatrix> configurations;
};

/// Checks every scenario invariant (dense ids, attribute bounds, matrix
/// shapes) and returns the scenario unchanged. Throws DimensionMismatch,
/// EmptyScenario or AttributeOutOfRange on violation.
Scenario validate_scenario(Scenario raw);

/// JSON (de)serialization of the scenario schema. Unknown fields are
/// rejected; deserialization validates.
std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);

} // namespace ctrust

#endif
