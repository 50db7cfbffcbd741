#include "ctrust/rules.hpp"

#include <algorithm>

namespace ctrust {

RuleSpec RuleSpec::n_expert(int k) {
    if (k < 1) throw Error("n-expert requires k >= 1");
    return {Kind::NExpert, k};
}

std::string RuleSpec::name() const {
    switch (kind) {
        case Kind::MostExpert: return "most-expert";
        case Kind::NExpert: return "n-expert:" + std::to_string(k);
        case Kind::Majority: return "majority";
        case Kind::GravityPoint: return "gravity-point";
    }
    return "?";
}

RuleSpec RuleSpec::parse(const std::string& name) {
    if (name == "most-expert") return most_expert();
    if (name == "majority") return majority();
    if (name == "gravity-point") return gravity_point();
    if (name.rfind("n-expert:", 0) == 0) {
        try {
            return n_expert(std::stoi(name.substr(9)));
        } catch (const std::exception&) {
            throw ParseError("bad n-expert group size in \"" + name + "\"");
        }
    }
    throw ParseError("unknown rule \"" + name + "\"");
}

GroupOfInterest group_of_interest(const RuleSpec& rule, const TotalOrder& order,
                                  std::size_t i) {
    const std::size_t n = order.size();
    if (i >= n) throw IndexOutOfRange("position out of range");
    GroupOfInterest g;
    switch (rule.kind) {
        case RuleSpec::Kind::MostExpert:
            if (i > 0) g.member_positions.push_back(0);
            break;
        case RuleSpec::Kind::NExpert: {
            std::size_t count = std::min<std::size_t>(rule.k, i);
            for (std::size_t j = i - count; j < i; ++j)
                g.member_positions.push_back(j);
            break;
        }
        case RuleSpec::Kind::Majority:
            for (std::size_t j = 0; j < n; ++j)
                g.member_positions.push_back(j);
            break;
        case RuleSpec::Kind::GravityPoint:
            if (i > 0) g.member_positions.push_back(i - 1);
            if (i + 1 < n) g.member_positions.push_back(i + 1);
            break;
    }
    return g;
}

bool combine_unanimous_flip(bool own, const std::vector<bool>& inputs) {
    if (inputs.empty()) return own;
    for (bool v : inputs)
        if (v == own) return own;
    return !own;
}

bool combine_majority(bool own, const std::vector<bool>& inputs) {
    std::size_t ones = own ? 1 : 0;
    for (bool v : inputs) ones += v ? 1 : 0;
    const std::size_t total = inputs.size() + 1;
    if (2 * ones > total) return true;
    if (2 * ones < total) return false;
    return own;
}

bool gravity_decide(const TotalOrder& order, const std::vector<bool>& raw,
                    std::size_t i) {
    const std::size_t n = order.size();
    if (raw.size() != n) throw LengthMismatch("raw beliefs do not match order length");
    if (i >= n) throw IndexOutOfRange("position out of range");
    const bool own = raw[i];

    // Expand symmetrically around the gravity point. The pair stage flips
    // on consensus against own; a split expands. From then on a strict
    // majority among the members decides; exhaustion with a tie keeps own.
    for (std::size_t radius = 1;; ++radius) {
        std::size_t members = 0, ones = 0;
        for (std::size_t r = 1; r <= radius; ++r) {
            if (i >= r) { ++members; ones += raw[i - r] ? 1 : 0; }
            if (i + r < n) { ++members; ones += raw[i + r] ? 1 : 0; }
        }
        if (members == 0) return own;
        if (2 * ones > members) return true;
        if (2 * (members - ones) > members) return false;
        const bool exhausted = (i < radius + 1) && (i + radius + 1 >= n);
        if (exhausted) return own;
    }
}

} // namespace ctrust
