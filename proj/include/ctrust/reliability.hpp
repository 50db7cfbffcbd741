#ifndef CTRUST_RELIABILITY_HPP
#define CTRUST_RELIABILITY_HPP

#include <cstddef>
#include <cstdint>
#include <utility>

#include "ctrust/model.hpp"

namespace ctrust {

enum class ErrorStatus { UnchangedCorrect, UnchangedError, Corrected, Introduced };

/// (correctness, error) of a belief against the truth; error is the XOR.
std::pair<bool, bool> correctness_error(bool x, bool t);

ErrorStatus classify(bool x, bool y, bool t);

/// Fraction of predicates the agent believes correctly.
double individual_reliability(const BeliefMatrix& x, const GroundTruth& t,
                              std::size_t agent);

struct ErrorTally {
    std::uint64_t unchanged_correct = 0;
    std::uint64_t unchanged_error = 0;
    std::uint64_t corrected = 0;
    std::uint64_t introduced = 0;

    std::uint64_t total() const {
        return unchanged_correct + unchanged_error + corrected + introduced;
    }
};

ErrorTally tally(const BeliefMatrix& x, const BeliefMatrix& y, const GroundTruth& t);

/// (unchanged_correct + introduced) / (unchanged_correct + corrected).
/// 1 means collaboration neutral, below 1 beneficial. Throws
/// UndefinedRatio on a zero denominator.
double collaborative_reliability(const ErrorTally& t);

} // namespace ctrust

#endif
