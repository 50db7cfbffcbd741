#include "ctrust/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

namespace ctrust {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
    // decorrelate sub-streams before mixing with the seed
    std::uint64_t s = stream;
    state_ = seed ^ splitmix64(s);
}

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_in(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
}

bool RngStream::bernoulli(double p) { return next_unit() < p; }

std::pair<double, double> profile_quality_range(DistributionProfile p) {
    switch (p) {
        case DistributionProfile::Dist1: return {5.0, 20.0};
        case DistributionProfile::Dist2: return {10.0, 74.0};
        case DistributionProfile::Dist3: return {36.0, 100.0};
        case DistributionProfile::Dist4: return {78.0, 100.0};
    }
    throw InvalidRange("unknown distribution profile");
}

DistributionProfile parse_profile(const std::string& name) {
    if (name == "dist1") return DistributionProfile::Dist1;
    if (name == "dist2") return DistributionProfile::Dist2;
    if (name == "dist3") return DistributionProfile::Dist3;
    if (name == "dist4") return DistributionProfile::Dist4;
    throw ParseError("unknown profile \"" + name + "\" (expected dist1..dist4)");
}

std::vector<AttributeVector> gen_attributes(const GeneratorSpec& spec, RngStream& rng) {
    if (!(spec.quality_lo <= spec.quality_hi) || spec.quality_lo < 0.0 ||
        spec.quality_hi > 100.0)
        throw InvalidRange("quality range must satisfy 0 <= lo <= hi <= 100");
    std::vector<AttributeVector> out;
    out.reserve(spec.n_systems);
    for (std::size_t i = 0; i < spec.n_systems; ++i) {
        AttributeVector v;
        v.values.reserve(spec.n_attributes);
        for (std::size_t a = 0; a < spec.n_attributes; ++a)
            v.values.push_back(rng.next_in(spec.quality_lo, spec.quality_hi));
        out.push_back(std::move(v));
    }
    return out;
}

double error_rate(const AttributeVector& attrs, double alpha) {
    const double mean = std::accumulate(attrs.values.begin(), attrs.values.end(), 0.0) /
                        static_cast<double>(attrs.dim());
    return std::clamp(alpha * (1.0 - mean / 100.0), 0.0, 1.0);
}

BeliefMatrix gen_beliefs(const std::vector<AutonomousSystem>& systems,
                         const GroundTruth& truth, double alpha, RngStream& rng) {
    BeliefMatrix m(systems.size(), truth.size(), BeliefRole::Raw);
    for (std::size_t i = 0; i < systems.size(); ++i) {
        const double eps = error_rate(systems[i].attributes, alpha);
        for (std::size_t p = 0; p < truth.size(); ++p) {
            const bool erroneous = rng.bernoulli(eps);
            m.set(i, p, erroneous ? !truth.at(p) : truth.at(p));
        }
    }
    return m;
}

Scenario gen_scenario(const GeneratorSpec& spec) {
    if (spec.n_systems < 1 || spec.n_attributes < 1 || spec.n_predicates < 1 ||
        spec.n_configurations < 1)
        throw InvalidRange("generator counts must be at least 1");

    Scenario s;
    RngStream attr_rng(spec.seed, 0);
    auto attrs = gen_attributes(spec, attr_rng);
    for (std::size_t i = 0; i < spec.n_systems; ++i)
        s.systems.push_back({static_cast<int>(i), std::move(attrs[i]), {}});
    for (std::size_t p = 0; p < spec.n_predicates; ++p)
        s.predicates.push_back({static_cast<int>(p), "p" + std::to_string(p)});
    // the error model is symmetric in the truth value, so a fixed truth
    // keeps scenarios reproducible without loss of generality
    s.truth.assignment.assign(spec.n_predicates, true);
    for (std::size_t c = 0; c < spec.n_configurations; ++c) {
        RngStream cfg_rng(spec.seed, c + 1);
        s.configurations.push_back(gen_beliefs(s.systems, s.truth, spec.error_scale, cfg_rng));
    }
    return validate_scenario(std::move(s));
}

std::string generator_spec_to_json(const GeneratorSpec& spec) {
    nlohmann::json j;
    j["n_systems"] = spec.n_systems;
    j["n_attributes"] = spec.n_attributes;
    j["n_predicates"] = spec.n_predicates;
    j["n_configurations"] = spec.n_configurations;
    j["quality_range"] = {spec.quality_lo, spec.quality_hi};
    j["error_scale"] = spec.error_scale;
    j["seed"] = spec.seed;
    return j.dump(2) + "\n";
}

GeneratorSpec generator_spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid generator spec JSON: ") + e.what());
    }
    GeneratorSpec spec;
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string& key = it.key();
            if (key == "n_systems") spec.n_systems = it->get<std::size_t>();
            else if (key == "n_attributes") spec.n_attributes = it->get<std::size_t>();
            else if (key == "n_predicates") spec.n_predicates = it->get<std::size_t>();
            else if (key == "n_configurations") spec.n_configurations = it->get<std::size_t>();
            else if (key == "quality_range") {
                auto r = it->get<std::vector<double>>();
                if (r.size() != 2) throw InvalidRange("quality_range must be [lo, hi]");
                spec.quality_lo = r[0];
                spec.quality_hi = r[1];
            } else if (key == "error_scale") spec.error_scale = it->get<double>();
            else if (key == "seed") spec.seed = it->get<std::uint64_t>();
            else throw ParseError("unknown field \"" + key + "\" in generator spec");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed generator spec JSON: ") + e.what());
    }
    if (spec.error_scale <= 0.0)
        throw InvalidRange("error_scale must be positive");
    return spec;
}

} // namespace ctrust
