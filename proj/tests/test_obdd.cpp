#include <doctest.h>

#include <random>

#include "ctrust/obdd.hpp"
#include "ctrust/propagation.hpp"

using namespace ctrust;

namespace {

TotalOrder identity(std::size_t n) {
    TotalOrder order;
    for (std::size_t i = 0; i < n; ++i) order.sequence.push_back(static_cast<int>(i));
    return order;
}

bool final_belief(std::size_t n, const RuleSpec& rule, const std::vector<bool>& raw) {
    return propagate_chain(identity(n), raw, rule).aggregated.back();
}

} // namespace

TEST_CASE("unreduced tree has 2^(n+1)-1 nodes") {
    for (std::size_t n : {1u, 3u, 6u, 10u}) {
        auto d = obdd::build_unreduced(n);
        CHECK(d.node_count() == (std::size_t{2} << n) - 1);
        CHECK(d.arena_size() == (std::size_t{2} << n) - 1);
    }
    CHECK_THROWS_AS(obdd::build_unreduced(0), EmptyInput);
    CHECK_THROWS_AS(obdd::build_unreduced(40), TooLarge);
}

TEST_CASE("unreduced tree evaluates the leaf function") {
    const std::size_t n = 5;
    auto parity = [](const std::vector<bool>& path) {
        int ones = 0;
        for (bool b : path) ones += b;
        return ones % 2 == 1;
    };
    auto d = obdd::build_unreduced(n, parity);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<bool> assignment;
        for (std::size_t i = 0; i < n; ++i) assignment.push_back((mask >> i) & 1);
        CHECK(obdd::evaluate(d, assignment) == parity(assignment));
    }
}

TEST_CASE("propagated diagram agrees with chain propagation") {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::size_t k = 1; k <= 3 && k <= n; ++k) {
            auto rule = RuleSpec::n_expert(k);
            auto d = obdd::build_propagated(identity(n), rule);
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::vector<bool> raw;
                for (std::size_t i = 0; i < n; ++i) raw.push_back((mask >> i) & 1);
                REQUIRE(obdd::evaluate(d, raw) == final_belief(n, rule, raw));
            }
        }
    }
}

TEST_CASE("reduction preserves the function") {
    std::mt19937 rng(47);
    for (std::size_t n = 1; n <= 10; ++n) {
        auto d = obdd::build_unreduced(n, [&](const std::vector<bool>&) {
            return bool(rng() & 1);
        });
        auto r = obdd::reduce(d);
        CHECK(r.node_count() <= d.node_count());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<bool> assignment;
            for (std::size_t i = 0; i < n; ++i) assignment.push_back((mask >> i) & 1);
            REQUIRE(obdd::evaluate(r, assignment) == obdd::evaluate(d, assignment));
        }
    }
}

TEST_CASE("reduction is idempotent") {
    auto d = obdd::build_propagated(identity(8), RuleSpec::n_expert(2));
    auto once = obdd::reduce(d);
    auto twice = obdd::reduce(once);
    CHECK(twice.node_count() == once.node_count());
}

TEST_CASE("most-expert reduces to a single decision node") {
    for (std::size_t n : {2u, 5u, 12u, 20u}) {
        auto r = obdd::reduce(obdd::build_propagated(identity(n), RuleSpec::most_expert()));
        CHECK(r.node_count() == 3); // one test on the top expert, two terminals
        CHECK(r.node(r.root()).var == 0);
    }
}

TEST_CASE("2-expert diagrams stay linear in n") {
    for (std::size_t n = 2; n <= 20; ++n) {
        auto r = obdd::reduce(obdd::build_propagated(identity(n), RuleSpec::n_expert(2)));
        CHECK(r.node_count() <= 2 * n + 2);
    }
}

TEST_CASE("constant functions collapse to one terminal") {
    auto d = obdd::build_unreduced(6, [](const std::vector<bool>&) { return true; });
    auto r = obdd::reduce(d);
    CHECK(r.node_count() == 1);
    CHECK(r.node(r.root()).is_terminal());
    CHECK(r.node(r.root()).terminal_value());
}

TEST_CASE("propagated builder rejects non-expert rules") {
    CHECK_THROWS_AS(obdd::build_propagated(identity(4), RuleSpec::majority()),
                    UnsupportedRule);
    CHECK_THROWS_AS(obdd::build_propagated(identity(4), RuleSpec::gravity_point()),
                    UnsupportedRule);
}

TEST_CASE("evaluate rejects short assignments") {
    auto d = obdd::build_unreduced(4);
    CHECK_THROWS_AS(obdd::evaluate(d, {true}), AssignmentTooShort);
}

TEST_CASE("dot export names every reachable decision node") {
    auto d = obdd::reduce(obdd::build_propagated(identity(4), RuleSpec::n_expert(2)));
    std::string dot = obdd::to_dot(d);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("label") != std::string::npos);
}
