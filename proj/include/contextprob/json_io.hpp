#pragma once

#include <complex>
#include <optional>

#include "json.hpp"

#include "contextprob/complex_rep.hpp"
#include "contextprob/hyperbolic.hpp"
#include "contextprob/hyperbolic_rep.hpp"
#include "contextprob/probability.hpp"
#include "contextprob/simulator.hpp"

// JSON shapes used by the command-line tool and the file formats:
//   hyperbolic number      {"x": ..., "y": ...}
//   complex amplitude      {"re": ..., "im": ...}
//   standard-form entry    {"sign": +-1, "p": ..., "gamma": ...}
//   phase                  {"kind": "cos"|"cosh", "theta": ..., "sign": +-1}
//   interference profile   {"lambdas", "deltas", "behaviour", "phases", "family"}
// All input files carry a top-level "schema_version": 1.

namespace nlohmann {

template <>
struct adl_serializer<std::complex<double>> {
    static void to_json(json& out, const std::complex<double>& z) {
        out = json{{"re", z.real()}, {"im", z.imag()}};
    }
    static void from_json(const json& in, std::complex<double>& z) {
        z = {in.at("re").get<double>(), in.at("im").get<double>()};
    }
};

}  // namespace nlohmann

namespace contextprob {

inline constexpr int kSchemaVersion = 1;

/// Throws SchemaError unless doc has "schema_version" equal to kSchemaVersion.
void require_schema_version(const nlohmann::json& doc);

void to_json(nlohmann::json& out, const HyperbolicNumber& z);
void from_json(const nlohmann::json& in, HyperbolicNumber& z);

void to_json(nlohmann::json& out, const GStandardForm& form);
void from_json(const nlohmann::json& in, GStandardForm& form);

void to_json(nlohmann::json& out, const PhaseRepresentation& phase);
void from_json(const nlohmann::json& in, PhaseRepresentation& phase);

nlohmann::json profile_to_json(const InterferenceProfile& profile);
InterferenceProfile profile_from_json(const nlohmann::json& in);

/// Analytic problem instance: contexts, transitions, and either observed
/// outcome probabilities or prescribed interference data.
struct ProblemInput {
    ContextDistribution p;
    TransitionMatrix P;
    std::optional<OutcomeDistribution> q;
    std::optional<std::array<double, 2>> lambdas;
    std::optional<std::array<PhaseRepresentation, 2>> phases;
};

/// Reads {"schema_version", "p", "P", optional "q" | "lambdas" | "phases"}.
ProblemInput load_problem(const nlohmann::json& doc);

/// Reads {"schema_version", "joint", "disturbed", "n", "seed",
/// "replications", optional "pass_through"}.
EnsembleScenario load_scenario(const nlohmann::json& doc);

nlohmann::json scenario_to_json(const EnsembleScenario& scenario);

}  // namespace contextprob
