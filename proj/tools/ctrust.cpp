#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctrust/benchgen.hpp"
#include "ctrust/experiment.hpp"
#include "ctrust/obdd.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    out << content;
}

nlohmann::json order_to_json(const ctrust::TotalOrder& order) {
    return nlohmann::json(order.sequence);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"collaborative belief aggregation and propagation simulator"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic scenario");
    std::string gen_spec_path, gen_out, gen_profile;
    std::uint64_t gen_seed = 0;
    bool gen_seed_set = false;
    gen->add_option("--spec", gen_spec_path, "generator spec JSON file");
    gen->add_option("--out", gen_out, "output scenario file (default stdout)");
    gen->add_option("--profile", gen_profile, "quality preset dist1..dist4");
    gen->add_option("--seed", gen_seed, "master seed")->each([&](const std::string&) {
        gen_seed_set = true;
    });

    // run
    auto* run = app.add_subcommand("run", "run a rule sweep over a scenario");
    std::string run_scenario, run_out, run_format = "csv";
    std::vector<std::string> run_rules;
    std::size_t run_all_orders = 0;
    bool run_summary = false;
    run->add_option("--scenario", run_scenario, "scenario JSON file")->required();
    run->add_option("--rule", run_rules,
                    "rule name (repeatable): most-expert, n-expert:K, majority, gravity-point");
    run->add_option("--out", run_out, "output file (default stdout)");
    run->add_option("--format", run_format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    run->add_option("--all-orders", run_all_orders,
                    "sweep up to N lexicographic linear extensions instead of the "
                    "default quality-sorted order");
    run->add_flag("--summary", run_summary, "append per-rule means to stderr");

    // propagate
    auto* prop = app.add_subcommand("propagate", "emit one propagation trace as JSON");
    std::string prop_scenario, prop_rule = "n-expert:2";
    std::size_t prop_order_index = 0, prop_config = 0;
    prop->add_option("--scenario", prop_scenario, "scenario JSON file")->required();
    prop->add_option("--rule", prop_rule, "rule name");
    prop->add_option("--order-index", prop_order_index,
                     "index into the lexicographic linear extensions");
    prop->add_option("--config", prop_config, "configuration index");

    // lattice
    auto* lat = app.add_subcommand("lattice", "print the dominance lattice as JSON");
    std::string lat_scenario;
    std::size_t lat_extensions = 8;
    lat->add_option("--scenario", lat_scenario, "scenario JSON file")->required();
    lat->add_option("--extensions", lat_extensions, "max linear extensions to list");

    // bdd
    auto* bdd = app.add_subcommand("bdd", "build and reduce a propagated belief diagram");
    std::size_t bdd_n = 0;
    std::string bdd_rule = "n-expert:2", bdd_dump;
    bool bdd_verbose = false;
    bdd->add_option("--n", bdd_n, "number of systems")->required();
    bdd->add_option("--rule", bdd_rule, "expert-family rule");
    bdd->add_option("--dump", bdd_dump, "dump format (dot)")->check(CLI::IsMember({"dot"}));
    bdd->add_flag("--verbose", bdd_verbose, "also report counts without structural merging");

    // demo
    app.add_subcommand("demo", "run the intersection use case");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            ctrust::GeneratorSpec spec;
            if (!gen_spec_path.empty())
                spec = ctrust::generator_spec_from_json(read_file(gen_spec_path));
            if (!gen_profile.empty()) {
                auto [lo, hi] = ctrust::profile_quality_range(ctrust::parse_profile(gen_profile));
                spec.quality_lo = lo;
                spec.quality_hi = hi;
            }
            if (gen_seed_set) spec.seed = gen_seed;
            write_output(gen_out, ctrust::scenario_to_json(ctrust::gen_scenario(spec)));
        } else if (run->parsed()) {
            auto scenario = ctrust::scenario_from_json(read_file(run_scenario));
            std::vector<ctrust::RuleSpec> rules;
            if (run_rules.empty()) {
                rules = {ctrust::RuleSpec::most_expert(), ctrust::RuleSpec::n_expert(2),
                         ctrust::RuleSpec::n_expert(3), ctrust::RuleSpec::n_expert(4),
                         ctrust::RuleSpec::majority(), ctrust::RuleSpec::gravity_point()};
            } else {
                for (const auto& name : run_rules)
                    rules.push_back(ctrust::RuleSpec::parse(name));
            }
            std::vector<ctrust::TotalOrder> orders;
            if (run_all_orders > 0) {
                auto po = ctrust::build_partial_order(scenario.systems);
                orders = ctrust::linear_extensions(po, run_all_orders);
            } else {
                orders = {ctrust::default_order(scenario.systems)};
            }
            auto rows = ctrust::run_experiment(scenario, rules, orders);
            write_output(run_out, run_format == "csv" ? ctrust::results_to_csv(rows)
                                                      : ctrust::results_to_jsonl(rows));
            if (run_summary) {
                for (const auto& s : ctrust::summarize(rows))
                    std::cerr << s.rule << ": introduced% " << s.mean_introduced_pct
                              << ", corrected% " << s.mean_corrected_pct << ", R^c "
                              << s.mean_r_c << "\n";
            }
        } else if (prop->parsed()) {
            auto scenario = ctrust::scenario_from_json(read_file(prop_scenario));
            auto rule = ctrust::RuleSpec::parse(prop_rule);
            auto po = ctrust::build_partial_order(scenario.systems);
            auto orders = ctrust::linear_extensions(po, prop_order_index + 1);
            if (prop_order_index >= orders.size())
                throw ctrust::IndexOutOfRange("order index beyond extension count");
            auto aggregated =
                ctrust::propagate_all(scenario, prop_config, orders[prop_order_index], rule);
            nlohmann::json j;
            j["rule"] = rule.name();
            j["order"] = order_to_json(orders[prop_order_index]);
            j["config"] = prop_config;
            j["traces"] = nlohmann::json::array();
            for (const auto& t : aggregated.traces) {
                nlohmann::json jt;
                jt["predicate"] = t.predicate_id;
                jt["raw"] = t.raw;
                jt["aggregated"] = t.aggregated;
                if (t.convergence_index)
                    jt["convergence_index"] = *t.convergence_index;
                else
                    jt["convergence_index"] = nullptr;
                j["traces"].push_back(std::move(jt));
            }
            std::cout << j.dump(2) << "\n";
        } else if (lat->parsed()) {
            auto scenario = ctrust::scenario_from_json(read_file(lat_scenario));
            auto po = ctrust::build_partial_order(scenario.systems);
            nlohmann::json j;
            j["cover_edges"] = nlohmann::json::array();
            for (const auto& [a, b] : po.cover_edges)
                j["cover_edges"].push_back({a, b});
            j["depth_rank"] = po.depth_rank;
            j["join"] = po.join.values;
            j["meet"] = po.meet.values;
            j["extensions"] = nlohmann::json::array();
            for (const auto& order : ctrust::linear_extensions(po, lat_extensions))
                j["extensions"].push_back(order_to_json(order));
            std::cout << j.dump(2) << "\n";
        } else if (bdd->parsed()) {
            auto rule = ctrust::RuleSpec::parse(bdd_rule);
            ctrust::TotalOrder order;
            order.sequence.resize(bdd_n);
            for (std::size_t i = 0; i < bdd_n; ++i)
                order.sequence[i] = static_cast<int>(i);
            auto propagated = ctrust::obdd::build_propagated(order, rule);
            auto reduced = ctrust::obdd::reduce(propagated);
            std::cout << "unreduced nodes: " << ((std::uint64_t{2} << bdd_n) - 1) << "\n";
            std::cout << "propagated nodes: " << propagated.node_count() << "\n";
            std::cout << "reduced nodes: " << reduced.node_count() << "\n";
            if (bdd_verbose) {
                // duplicate-terminal removal alone, no isomorphic-node merging
                std::size_t decisions = 0;
                std::vector<bool> seen(propagated.arena_size(), false);
                std::vector<ctrust::obdd::NodeId> stack{propagated.root()};
                seen[propagated.root()] = true;
                while (!stack.empty()) {
                    auto id = stack.back();
                    stack.pop_back();
                    const auto& nd = propagated.node(id);
                    if (nd.is_terminal()) continue;
                    ++decisions;
                    for (auto child : {nd.lo, nd.hi})
                        if (!seen[child]) {
                            seen[child] = true;
                            stack.push_back(child);
                        }
                }
                std::cout << "terminal-merge only: " << decisions + 2 << "\n";
            }
            if (bdd_dump == "dot") std::cout << ctrust::obdd::to_dot(reduced);
        } else {
            ctrust::demo_intersection(std::cout);
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ctrust::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
