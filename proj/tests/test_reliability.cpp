#include <doctest.h>

#include <cmath>
#include <random>

#include "ctrust/reliability.hpp"

using namespace ctrust;

TEST_CASE("correctness and error are complementary") {
    CHECK(correctness_error(true, true) == std::pair{true, false});
    CHECK(correctness_error(false, true) == std::pair{false, true});
    CHECK(correctness_error(false, false) == std::pair{true, false});
    CHECK(correctness_error(true, false) == std::pair{false, true});
}

TEST_CASE("classification covers all eight belief transitions") {
    // (x, y, t) -> status, enumerating raw/aggregated/truth combinations
    CHECK(classify(true, true, true) == ErrorStatus::UnchangedCorrect);
    CHECK(classify(false, false, false) == ErrorStatus::UnchangedCorrect);
    CHECK(classify(false, false, true) == ErrorStatus::UnchangedError);
    CHECK(classify(true, true, false) == ErrorStatus::UnchangedError);
    CHECK(classify(false, true, true) == ErrorStatus::Corrected);
    CHECK(classify(true, false, false) == ErrorStatus::Corrected);
    CHECK(classify(true, false, true) == ErrorStatus::Introduced);
    CHECK(classify(false, true, false) == ErrorStatus::Introduced);
}

TEST_CASE("individual reliability counts correct predicates") {
    BeliefMatrix x(2, 4, BeliefRole::Raw);
    GroundTruth t{{true, false, true, true}};
    x.set(0, 0, true);
    x.set(0, 2, true); // agent 0 right on p0, p1, p2, wrong on p3
    CHECK(individual_reliability(x, t, 0) == doctest::Approx(0.75));
    CHECK(individual_reliability(x, t, 1) == doctest::Approx(0.25));
    CHECK_THROWS_AS(individual_reliability(x, t, 2), IndexOutOfRange);
}

TEST_CASE("tally matches a cell-by-cell recount") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 8, m = 1 + rng() % 5;
        BeliefMatrix x(n, m, BeliefRole::Raw), y(n, m, BeliefRole::Aggregated);
        GroundTruth t;
        for (std::size_t p = 0; p < m; ++p) t.assignment.push_back(rng() & 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < m; ++p) {
                x.set(i, p, rng() & 1);
                y.set(i, p, rng() & 1);
            }
        ErrorTally counts = tally(x, y, t);
        ErrorTally expected;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < m; ++p)
                switch (classify(x.at(i, p), y.at(i, p), t.at(p))) {
                    case ErrorStatus::UnchangedCorrect: ++expected.unchanged_correct; break;
                    case ErrorStatus::UnchangedError: ++expected.unchanged_error; break;
                    case ErrorStatus::Corrected: ++expected.corrected; break;
                    case ErrorStatus::Introduced: ++expected.introduced; break;
                }
        CHECK(counts.unchanged_correct == expected.unchanged_correct);
        CHECK(counts.unchanged_error == expected.unchanged_error);
        CHECK(counts.corrected == expected.corrected);
        CHECK(counts.introduced == expected.introduced);
        CHECK(counts.total() == n * m);
    }
}

TEST_CASE("tally rejects mismatched shapes") {
    BeliefMatrix x(2, 2, BeliefRole::Raw), y(3, 2, BeliefRole::Aggregated);
    GroundTruth t{{true, true}};
    CHECK_THROWS_AS(tally(x, y, t), DimensionMismatch);
}

TEST_CASE("collaborative reliability anchor values") {
    // all prior errors corrected, none introduced: ratio below 1
    CHECK(collaborative_reliability({10, 0, 10, 0}) == doctest::Approx(0.5));
    // nothing changes: exactly neutral
    CHECK(collaborative_reliability({10, 5, 0, 0}) == doctest::Approx(1.0));
    // errors spread: ratio above 1
    CHECK(collaborative_reliability({8, 0, 3, 12}) == doctest::Approx(20.0 / 11.0));
    CHECK_THROWS_AS(collaborative_reliability({0, 7, 0, 3}), UndefinedRatio);
}

TEST_CASE("collaborative reliability identity on random tallies") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        ErrorTally t{rng() % 50 + 1, rng() % 50, rng() % 50, rng() % 50};
        double r = collaborative_reliability(t);
        double num = double(t.unchanged_correct + t.introduced);
        double den = double(t.unchanged_correct + t.corrected);
        CHECK(r == doctest::Approx(num / den));
        if (t.introduced == 0 && t.corrected > 0) CHECK(r < 1.0);
    }
}
