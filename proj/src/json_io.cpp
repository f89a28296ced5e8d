#include "contextprob/json_io.hpp"

namespace contextprob {

using nlohmann::json;

void require_schema_version(const json& doc) {
    if (!doc.is_object() || !doc.contains("schema_version")) {
        throw SchemaError("input is missing \"schema_version\"");
    }
    const auto& v = doc.at("schema_version");
    if (!v.is_number_integer() || v.get<int>() != kSchemaVersion) {
        throw SchemaError("unsupported schema_version, expected " + std::to_string(kSchemaVersion));
    }
}

void to_json(json& out, const HyperbolicNumber& z) { out = json{{"x", z.x}, {"y", z.y}}; }

void from_json(const json& in, HyperbolicNumber& z) {
    z.x = in.at("x").get<double>();
    z.y = in.at("y").get<double>();
}

void to_json(json& out, const GStandardForm& form) {
    out = json{{"sign", form.sign}, {"p", form.p}, {"gamma", form.gamma}};
}

void from_json(const json& in, GStandardForm& form) {
    form.sign = in.at("sign").get<int>();
    form.p = in.at("p").get<double>();
    form.gamma = in.at("gamma").get<double>();
}

void to_json(json& out, const PhaseRepresentation& phase) {
    out = json{{"kind", phase.kind == PhaseKind::Cos ? "cos" : "cosh"},
               {"theta", phase.theta},
               {"sign", phase.sign}};
}

void from_json(const json& in, PhaseRepresentation& phase) {
    const auto kind = in.at("kind").get<std::string>();
    if (kind == "cos") {
        phase.kind = PhaseKind::Cos;
    } else if (kind == "cosh") {
        phase.kind = PhaseKind::Cosh;
    } else {
        throw SchemaError("phase kind must be \"cos\" or \"cosh\"");
    }
    phase.theta = in.at("theta").get<double>();
    phase.sign = in.at("sign").get<int>();
}

json profile_to_json(const InterferenceProfile& profile) {
    json family = json::array();
    for (const LambdaEntry& e : profile.family) {
        family.push_back(json{{"outcome", e.outcome},
                              {"k", e.ctx_k},
                              {"l", e.ctx_l},
                              {"delta", e.delta},
                              {"lambda", e.lambda}});
    }
    return json{{"lambdas", profile.lambdas},
                {"deltas", profile.deltas},
                {"behaviour", to_string(profile.behaviour)},
                {"phases", profile.phases},
                {"family", std::move(family)}};
}

InterferenceProfile profile_from_json(const json& in) {
    InterferenceProfile profile;
    profile.lambdas = in.at("lambdas").get<std::vector<double>>();
    profile.deltas = in.at("deltas").get<std::vector<double>>();
    const auto behaviour = in.at("behaviour").get<std::string>();
    if (behaviour == "C") profile.behaviour = Behaviour::Classical;
    else if (behaviour == "T") profile.behaviour = Behaviour::Trigonometric;
    else if (behaviour == "H") profile.behaviour = Behaviour::Hyperbolic;
    else if (behaviour == "HT") profile.behaviour = Behaviour::HyperTrigonometric;
    else throw SchemaError("behaviour must be one of C, T, H, HT");
    profile.phases = in.at("phases").get<std::vector<PhaseRepresentation>>();
    for (const auto& e : in.at("family")) {
        profile.family.push_back({e.at("outcome").get<std::size_t>(),
                                  e.at("k").get<std::size_t>(),
                                  e.at("l").get<std::size_t>(),
                                  e.at("delta").get<double>(),
                                  e.at("lambda").get<double>()});
    }
    return profile;
}

ProblemInput load_problem(const json& doc) {
    require_schema_version(doc);
    ContextDistribution p(doc.at("p").get<std::vector<double>>());
    TransitionMatrix P(doc.at("P").get<std::vector<std::vector<double>>>());

    ProblemInput problem{std::move(p), std::move(P), std::nullopt, std::nullopt, std::nullopt};
    if (doc.contains("q")) {
        problem.q = OutcomeDistribution(doc.at("q").get<std::vector<double>>());
    }
    if (doc.contains("lambdas")) {
        problem.lambdas = doc.at("lambdas").get<std::array<double, 2>>();
    }
    if (doc.contains("phases")) {
        problem.phases = doc.at("phases").get<std::array<PhaseRepresentation, 2>>();
    }
    return problem;
}

EnsembleScenario load_scenario(const json& doc) {
    require_schema_version(doc);
    EnsembleScenario scenario{
        doc.at("joint").get<std::array<std::array<double, 2>, 2>>(),
        TransitionMatrix(doc.at("disturbed").get<std::vector<std::vector<double>>>()),
        doc.at("n").get<std::uint64_t>(),
        doc.at("seed").get<std::uint64_t>(),
        doc.at("replications").get<int>(),
        doc.value("pass_through", false)};
    validate(scenario);
    return scenario;
}

json scenario_to_json(const EnsembleScenario& scenario) {
    return json{{"schema_version", kSchemaVersion},
                {"joint", scenario.joint},
                {"disturbed", scenario.disturbed.rows()},
                {"n", scenario.n},
                {"seed", scenario.seed},
                {"replications", scenario.replications},
                {"pass_through", scenario.pass_through}};
}

}  // namespace contextprob
