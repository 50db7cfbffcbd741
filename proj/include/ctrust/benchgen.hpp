#ifndef CTRUST_BENCHGEN_HPP
#define CTRUST_BENCHGEN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ctrust/model.hpp"

namespace ctrust {

/// Splittable counter-based generator (splitmix64). Sub-streams keyed by
/// (seed, stream) are independent and platform-stable.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double next_unit();                       // [0, 1)
    double next_in(double lo, double hi);
    bool bernoulli(double p);

private:
    std::uint64_t state_;
};

struct GeneratorSpec {
    std::size_t n_systems = 20;
    std::size_t n_attributes = 2;
    std::size_t n_predicates = 1;
    std::size_t n_configurations = 100;
    double quality_lo = 0.0;
    double quality_hi = 100.0;
    double error_scale = 1.0; // alpha in eps = alpha * (1 - mean quality / 100)
    std::uint64_t seed = 0;
};

enum class DistributionProfile { Dist1, Dist2, Dist3, Dist4 };

/// Quality ranges mapping each profile's error band back through the
/// linear error model (alpha = 1).
std::pair<double, double> profile_quality_range(DistributionProfile p);
DistributionProfile parse_profile(const std::string& name);

std::vector<AttributeVector> gen_attributes(const GeneratorSpec& spec, RngStream& rng);

double error_rate(const AttributeVector& attrs, double alpha);

BeliefMatrix gen_beliefs(const std::vector<AutonomousSystem>& systems,
                         const GroundTruth& truth, double alpha, RngStream& rng);

/// Full deterministic scenario: one attribute draw shared by all
/// configurations, one belief matrix per configuration.
Scenario gen_scenario(const GeneratorSpec& spec);

std::string generator_spec_to_json(const GeneratorSpec& spec);
GeneratorSpec generator_spec_from_json(const std::string& text);

} // namespace ctrust

#endif
