#include "ctrust/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace ctrust {

namespace {

std::string fmt6(double v) {
    if (std::isnan(v)) return "nan";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

ExperimentResult make_row(const Scenario& scenario, const RuleSpec& rule,
                          const TotalOrder& order, std::size_t order_index,
                          std::size_t config_index) {
    const BeliefMatrix& x = scenario.configurations[config_index];
    auto aggregated = propagate_all(scenario, config_index, order, rule);
    ErrorTally t = tally(x, aggregated.y, scenario.truth);
    const double cells = static_cast<double>(t.total());

    ExperimentResult row;
    row.rule = rule.name();
    row.order_index = order_index;
    row.config_index = config_index;
    row.tally = t;
    row.individual_err_pct =
        100.0 * static_cast<double>(t.unchanged_error + t.corrected) / cells;
    row.introduced_pct = 100.0 * static_cast<double>(t.introduced) / cells;
    row.corrected_pct = 100.0 * static_cast<double>(t.corrected) / cells;
    row.r_c = (t.unchanged_correct + t.corrected) == 0
                  ? std::nan("")
                  : collaborative_reliability(t);
    return row;
}

} // namespace

std::vector<ExperimentResult> run_experiment(const Scenario& scenario,
                                             const std::vector<RuleSpec>& rules,
                                             const std::vector<TotalOrder>& orders) {
    if (rules.empty() || orders.empty())
        throw EmptyInput("run_experiment needs at least one rule and one order");
    const std::size_t n_configs = scenario.configurations.size();
    const std::size_t n_rows = rules.size() * orders.size() * n_configs;
    std::vector<ExperimentResult> rows(n_rows);

    // rows are independent; fill the preallocated vector from a small
    // worker pool and the output order stays deterministic
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t idx = next.fetch_add(1); idx < n_rows; idx = next.fetch_add(1)) {
            const std::size_t config = idx % n_configs;
            const std::size_t order_index = (idx / n_configs) % orders.size();
            const std::size_t rule_index = idx / (n_configs * orders.size());
            rows[idx] = make_row(scenario, rules[rule_index], orders[order_index],
                                 order_index, config);
        }
    };
    const std::size_t n_threads =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n_rows);
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < n_threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return rows;
}

std::vector<RuleSummary> summarize(const std::vector<ExperimentResult>& results) {
    if (results.empty()) throw EmptyResults("no experiment results to summarize");
    std::vector<std::string> order;
    std::map<std::string, std::array<double, 4>> acc; // i%, c%, r_c sum, r_c count
    for (const auto& row : results) {
        auto it = acc.find(row.rule);
        if (it == acc.end()) {
            order.push_back(row.rule);
            it = acc.emplace(row.rule, std::array<double, 4>{0, 0, 0, 0}).first;
        }
        it->second[0] += row.introduced_pct;
        it->second[1] += row.corrected_pct;
        if (!std::isnan(row.r_c)) {
            it->second[2] += row.r_c;
            it->second[3] += 1;
        }
    }
    std::map<std::string, std::size_t> counts;
    for (const auto& row : results) ++counts[row.rule];

    std::vector<RuleSummary> out;
    for (const auto& rule : order) {
        const auto& a = acc[rule];
        const double n = static_cast<double>(counts[rule]);
        out.push_back({rule, a[0] / n, a[1] / n, a[3] > 0 ? a[2] / a[3] : std::nan("")});
    }
    return out;
}

std::string results_to_csv(const std::vector<ExperimentResult>& results) {
    std::ostringstream os;
    os << "rule,order,config,unchanged_correct,unchanged_error,corrected,introduced,"
          "individual_err_pct,introduced_pct,corrected_pct,r_c\n";
    for (const auto& r : results) {
        os << r.rule << ',' << r.order_index << ',' << r.config_index << ','
           << r.tally.unchanged_correct << ',' << r.tally.unchanged_error << ','
           << r.tally.corrected << ',' << r.tally.introduced << ','
           << fmt6(r.individual_err_pct) << ',' << fmt6(r.introduced_pct) << ','
           << fmt6(r.corrected_pct) << ',' << fmt6(r.r_c) << '\n';
    }
    return os.str();
}

std::string results_to_jsonl(const std::vector<ExperimentResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        nlohmann::json j;
        j["rule"] = r.rule;
        j["order"] = r.order_index;
        j["config"] = r.config_index;
        j["unchanged_correct"] = r.tally.unchanged_correct;
        j["unchanged_error"] = r.tally.unchanged_error;
        j["corrected"] = r.tally.corrected;
        j["introduced"] = r.tally.introduced;
        j["individual_err_pct"] = r.individual_err_pct;
        j["introduced_pct"] = r.introduced_pct;
        j["corrected_pct"] = r.corrected_pct;
        if (std::isnan(r.r_c)) j["r_c"] = nullptr; else j["r_c"] = r.r_c;
        os << j.dump() << '\n';
    }
    return os.str();
}

Scenario intersection_fixture() {
    Scenario s;
    const double attrs[5][2] = {
        {1271, 53.3}, {3766, 66.7}, {748, 22.2}, {915, 60}, {0, 26.7}};
    const bool beliefs[5] = {true, true, false, true, false};
    for (int i = 0; i < 5; ++i)
        s.systems.push_back({i, AttributeVector{{attrs[i][0], attrs[i][1]}}, {}});
    s.predicates.push_back({0, "The pedestrian crosswalk is free"});
    s.truth.assignment = {true}; // pedestrian present
    BeliefMatrix cfg(5, 1, BeliefRole::Raw);
    for (int i = 0; i < 5; ++i) cfg.set(i, 0, beliefs[i]);
    s.configurations.push_back(std::move(cfg));
    return validate_scenario(std::move(s));
}

const std::array<int, 5>& intersection_pinned_ranks() {
    static const std::array<int, 5> ranks{2, 1, 3, 2, 4};
    return ranks;
}

void demo_intersection(std::ostream& out) {
    Scenario s = intersection_fixture();
    PartialOrder po = build_partial_order(s.systems);

    out << "Intersection demo: 5 vehicles, predicate \"" << s.predicates[0].label
        << "\", truth = " << s.truth.at(0) << "\n\n";
    out << "vehicle  attributes        belief  rank(depth)  rank(published)\n";
    for (std::size_t i = 0; i < 5; ++i) {
        char line[96];
        std::snprintf(line, sizeof line, "%4zu     (%6g, %4g)   %d       %d            %d\n",
                      i + 1, s.systems[i].attributes[0], s.systems[i].attributes[1],
                      s.configurations[0].at(i, 0) ? 1 : 0, po.depth_rank[i],
                      intersection_pinned_ranks()[i]);
        out << line;
    }
    out << "\ncover edges (dominator -> dominated, 1-based): ";
    for (const auto& [a, b] : po.cover_edges) out << a + 1 << "->" << b + 1 << " ";
    out << "\nraw peer disagreement: "
        << (detect_peer_disagreement(s.configurations[0], 0) ? "yes" : "no") << "\n";

    auto extensions = linear_extensions(po, 3);
    for (const auto& rule : {RuleSpec::n_expert(2), RuleSpec::n_expert(3)}) {
        out << "\nrule " << rule.name() << ":\n";
        for (std::size_t e = 0; e < extensions.size(); ++e) {
            auto aggregated = propagate_all(s, 0, extensions[e], rule);
            const auto& trace = aggregated.traces[0];
            out << "  order";
            for (int id : extensions[e].sequence) out << ' ' << id + 1;
            out << "  raw";
            for (bool b : trace.raw) out << ' ' << b;
            out << "  aggregated";
            for (bool b : trace.aggregated) out << ' ' << b;
            ErrorTally t = tally(s.configurations[0], aggregated.y, s.truth);
            out << "  corrected=" << t.corrected << " introduced=" << t.introduced << "\n";
        }
    }
}

} // namespace ctrust
