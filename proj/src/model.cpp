#include "ctrust/model.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

namespace ctrust {

Scenario validate_scenario(Scenario raw) {
    if (raw.systems.empty())
        throw EmptyScenario("scenario has no autonomous systems");
    if (raw.predicates.empty())
        throw EmptyScenario("scenario has no predicates");
    if (raw.configurations.empty())
        throw EmptyScenario("scenario has no belief configurations");

    const std::size_t n = raw.systems.size();
    const std::size_t m = raw.predicates.size();

    std::set<int> ids;
    for (std::size_t i = 0; i < n; ++i) ids.insert(raw.systems[i].id);
    if (ids.size() != n || *ids.begin() != 0 || *ids.rbegin() != static_cast<int>(n) - 1)
        throw DimensionMismatch("system ids must be unique and dense 0..n-1");

    ids.clear();
    for (std::size_t p = 0; p < m; ++p) ids.insert(raw.predicates[p].id);
    if (ids.size() != m || *ids.begin() != 0 || *ids.rbegin() != static_cast<int>(m) - 1)
        throw DimensionMismatch("predicate ids must be unique and dense 0..|P|-1");

    const std::size_t d = raw.systems.front().attributes.dim();
    if (d < 1)
        throw AttributeOutOfRange("attribute dimension must be at least 1");
    for (const auto& s : raw.systems) {
        if (s.attributes.dim() != d)
            throw AttributeOutOfRange("attribute dimension differs across systems");
        for (double v : s.attributes.values)
            if (!std::isfinite(v) || v < 0.0)
                throw AttributeOutOfRange("attribute values must be finite and >= 0");
    }

    if (raw.truth.size() != m)
        throw DimensionMismatch("ground truth size does not match predicate count");

    for (const auto& cfg : raw.configurations) {
        if (cfg.systems() != n || cfg.predicates() != m)
            throw DimensionMismatch("configuration shape does not match systems x predicates");
        if (cfg.role() != BeliefRole::Raw)
            throw DimensionMismatch("scenario configurations must hold raw beliefs");
    }

    return raw;
}

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const char* where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* key : allowed)
            if (it.key() == key) { known = true; break; }
        if (!known)
            throw ParseError(std::string("unknown field \"") + it.key() + "\" in " + where);
    }
}

} // namespace

std::string scenario_to_json(const Scenario& s) {
    json j;
    j["attributes_dim"] = s.systems.empty() ? 0 : s.systems.front().attributes.dim();
    j["systems"] = json::array();
    for (const auto& sys : s.systems)
        j["systems"].push_back({{"id", sys.id}, {"attributes", sys.attributes.values}});
    j["predicates"] = json::array();
    for (const auto& p : s.predicates)
        j["predicates"].push_back({{"id", p.id}, {"label", p.label}});
    j["truth"] = s.truth.assignment;
    j["configurations"] = json::array();
    for (const auto& cfg : s.configurations) {
        json rows = json::array();
        for (std::size_t i = 0; i < cfg.systems(); ++i) {
            json row = json::array();
            for (std::size_t p = 0; p < cfg.predicates(); ++p)
                row.push_back(cfg.at(i, p));
            rows.push_back(std::move(row));
        }
        j["configurations"].push_back(std::move(rows));
    }
    return j.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid scenario JSON: ") + e.what());
    }
    try {
        reject_unknown(j, {"attributes_dim", "systems", "predicates", "truth", "configurations"},
                       "scenario");
        Scenario s;
        const std::size_t d = j.at("attributes_dim").get<std::size_t>();
        for (const auto& js : j.at("systems")) {
            reject_unknown(js, {"id", "attributes"}, "system");
            AutonomousSystem sys;
            sys.id = js.at("id").get<int>();
            sys.attributes.values = js.at("attributes").get<std::vector<double>>();
            if (sys.attributes.dim() != d)
                throw AttributeOutOfRange("attributes length does not match attributes_dim");
            s.systems.push_back(std::move(sys));
        }
        for (const auto& jp : j.at("predicates")) {
            reject_unknown(jp, {"id", "label"}, "predicate");
            s.predicates.push_back({jp.at("id").get<int>(), jp.at("label").get<std::string>()});
        }
        s.truth.assignment = j.at("truth").get<std::vector<bool>>();
        for (const auto& jc : j.at("configurations")) {
            BeliefMatrix cfg(s.systems.size(), s.predicates.size(), BeliefRole::Raw);
            if (jc.size() != s.systems.size())
                throw DimensionMismatch("configuration row count does not match systems");
            for (std::size_t i = 0; i < jc.size(); ++i) {
                const auto& row = jc[i];
                if (row.size() != s.predicates.size())
                    throw DimensionMismatch("configuration column count does not match predicates");
                for (std::size_t p = 0; p < row.size(); ++p)
                    cfg.set(i, p, row[p].get<bool>());
            }
            s.configurations.push_back(std::move(cfg));
        }
        return validate_scenario(std::move(s));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed scenario JSON: ") + e.what());
    }
}

} // namespace ctrust
