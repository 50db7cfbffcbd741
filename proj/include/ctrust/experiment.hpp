#ifndef CTRUST_EXPERIMENT_HPP
#define CTRUST_EXPERIMENT_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "ctrust/propagation.hpp"
#include "ctrust/reliability.hpp"

namespace ctrust {

struct ExperimentResult {
    std::string rule;
    std::size_t order_index = 0;
    std::size_t config_index = 0;
    ErrorTally tally;
    double individual_err_pct = 0; // raw errors as % of all cells
    double introduced_pct = 0;
    double corrected_pct = 0;
    double r_c = 0; // NaN when the ratio is undefined
};

/// One row per (rule, order, configuration), in that nesting order.
/// Configurations are processed by a worker pool; rows come back in
/// deterministic index order regardless.
std::vector<ExperimentResult> run_experiment(const Scenario& scenario,
                                             const std::vector<RuleSpec>& rules,
                                             const std::vector<TotalOrder>& orders);

struct RuleSummary {
    std::string rule;
    double mean_introduced_pct = 0;
    double mean_corrected_pct = 0;
    double mean_r_c = 0;
};

std::vector<RuleSummary> summarize(const std::vector<ExperimentResult>& results);

std::string results_to_csv(const std::vector<ExperimentResult>& results);
std::string results_to_jsonl(const std::vector<ExperimentResult>& results);

/// The five-vehicle intersection scenario (pedestrian on the crosswalk,
/// truth = 1, raw beliefs 1,1,0,1,0).
Scenario intersection_fixture();

/// Expertise ranks as published for the fixture (vehicle 5's rank does
/// not follow from Hasse depth, so they are pinned, not derived).
const std::array<int, 5>& intersection_pinned_ranks();

/// Prints the fixture lattice, its linear extensions and propagation
/// traces for the 2- and 3-expert rules.
void demo_intersection(std::ostream& out);

} // namespace ctrust

#endif
