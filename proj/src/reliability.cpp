#include "ctrust/reliability.hpp"

namespace ctrust {

std::pair<bool, bool> correctness_error(bool x, bool t) {
    const bool correct = x == t;
    return {correct, !correct};
}

ErrorStatus classify(bool x, bool y, bool t) {
    if (x == y)
        return y == t ? ErrorStatus::UnchangedCorrect : ErrorStatus::UnchangedError;
    return y == t ? ErrorStatus::Corrected : ErrorStatus::Introduced;
}

double individual_reliability(const BeliefMatrix& x, const GroundTruth& t,
                              std::size_t agent) {
    if (agent >= x.systems()) throw IndexOutOfRange("agent id out of range");
    if (t.size() != x.predicates())
        throw DimensionMismatch("truth size does not match predicates");
    std::size_t correct = 0;
    for (std::size_t p = 0; p < x.predicates(); ++p)
        if (x.at(agent, p) == t.at(p)) ++correct;
    return static_cast<double>(correct) / static_cast<double>(x.predicates());
}

ErrorTally tally(const BeliefMatrix& x, const BeliefMatrix& y, const GroundTruth& t) {
    if (x.systems() != y.systems() || x.predicates() != y.predicates())
        throw DimensionMismatch("belief matrices of different shape");
    if (t.size() != x.predicates())
        throw DimensionMismatch("truth size does not match predicates");
    ErrorTally out;
    for (std::size_t i = 0; i < x.systems(); ++i)
        for (std::size_t p = 0; p < x.predicates(); ++p) {
            switch (classify(x.at(i, p), y.at(i, p), t.at(p))) {
                case ErrorStatus::UnchangedCorrect: ++out.unchanged_correct; break;
                case ErrorStatus::UnchangedError: ++out.unchanged_error; break;
                case ErrorStatus::Corrected: ++out.corrected; break;
                case ErrorStatus::Introduced: ++out.introduced; break;
            }
        }
    return out;
}

double collaborative_reliability(const ErrorTally& t) {
    const std::uint64_t denom = t.unchanged_correct + t.corrected;
    if (denom == 0)
        throw UndefinedRatio("no unchanged-correct or corrected beliefs");
    return static_cast<double>(t.unchanged_correct + t.introduced) /
           static_cast<double>(denom);
}

} // namespace ctrust
