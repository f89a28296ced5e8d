// Acceptance gate for the library: every release-blocking criterion runs in
// order and prints exactly one [PASS]/[FAIL] line.  The process exits nonzero
// when any criterion fails, with indented diagnostics under the failing line.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "contextprob/complex_rep.hpp"
#include "contextprob/hyperbolic.hpp"
#include "contextprob/hyperbolic_rep.hpp"
#include "contextprob/probability.hpp"
#include "contextprob/rng.hpp"
#include "contextprob/simulator.hpp"

namespace cp = contextprob;
using std::numbers::pi;

namespace {

std::string num(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

struct Checker {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }

    void expect_close(const std::string& label, double expected, double actual, double tol) {
        if (!(std::abs(expected - actual) <= tol)) {
            ok = false;
            notes.push_back(label + ": expected " + num(expected) + ", got " + num(actual) +
                            " (tol " + num(tol) + ")");
        }
    }
};

double uniform_in(cp::rng::UnitUniform& u, double lo, double hi) {
    return lo + (hi - lo) * u.next();
}

// ------------------------------------------------------------- criterion 1

void criterion_worked_example_a(Checker& c) {
    const cp::ContextDistribution p({0.5, 0.5});
    const cp::TransitionMatrix P({{0.5, 0.5}, {1.0 / 3.0, 2.0 / 3.0}});
    const double theta1 = 3.0 * pi / 4.0;
    const double theta2 = pi / 3.0;

    const cp::OutcomeDistribution q = cp::forward_transform(
        p, P, cp::profile_from_lambdas(p, P, std::cos(theta1), std::cos(theta2)));
    c.expect_close("q1", 5.0 / 12.0 + std::cos(theta1) / std::sqrt(6.0), q[0], 1e-9);
    c.expect_close("q2", 7.0 / 12.0 + std::cos(theta2) / std::sqrt(3.0), q[1], 1e-9);

    c.expect_close("coupling K", std::sqrt(2.0), cp::coupling_coefficient(P), 1e-9);

    const cp::InterferenceProfile profile = cp::interference_coefficients(p, P, q);
    c.expect(profile.behaviour == cp::Behaviour::Trigonometric,
             "behaviour: expected T, got " + cp::to_string(profile.behaviour));
    c.expect_close("lambda1", std::cos(theta1), profile.lambdas[0], 1e-9);
    c.expect_close("lambda2", std::cos(theta2), profile.lambdas[1], 1e-9);
    c.expect_close("phase1", theta1, profile.phases[0].theta, 1e-9);
    c.expect_close("phase2", theta2, profile.phases[1].theta, 1e-9);

    // The classification itself must come back within a millisecond.
    double best_ms = 1e300;
    for (int rep = 0; rep < 5; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        const cp::InterferenceProfile timed = cp::interference_coefficients(p, P, q);
        const double k = cp::coupling_coefficient(P);
        const auto t1 = std::chrono::steady_clock::now();
        if (timed.lambdas[0] > 2.0 || k < 0.0) c.expect(false, "unreachable");  // keep it live
        best_ms = std::min(best_ms, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    c.expect(best_ms < 1.0, "classification took " + num(best_ms) + " ms, limit 1 ms");
}

// ------------------------------------------------------------- criterion 2

void criterion_hyperbolic_bound(Checker& c) {
    const double bound = cp::admissible_h_phase_bound(0.25, 0.5);
    c.expect_close("admissible bound e(1/4, 1/2)", 2.0 / std::sqrt(3.0), bound, 1e-12);

    const cp::ContextDistribution p({0.25, 0.75});
    const cp::TransitionMatrix half({{0.5, 0.5}, {0.5, 0.5}});
    const double theta_max = std::acosh(bound);

    const cp::OutcomeDistribution q = cp::forward_transform(
        p, half,
        cp::profile_from_lambdas(p, half, -std::cosh(theta_max), std::cosh(theta_max)));
    c.expect_close("saturated q1", 0.0, q[0], 1e-9);
    c.expect_close("saturated q2", 1.0, q[1], 1e-9);

    bool rejected = false;
    try {
        cp::forward_transform(p, half,
                              cp::profile_from_lambdas(p, half, -std::cosh(theta_max + 1e-3),
                                                       std::cosh(theta_max + 1e-3)));
    } catch (const cp::NonphysicalResult&) {
        rejected = true;
    }
    c.expect(rejected, "overshooting the bound must raise NonphysicalResult");
}

// ------------------------------------------------------------- criterion 3

void criterion_disturbance_coupling(Checker& c) {
    const cp::ContextDistribution p({0.5, 0.5});
    const cp::TransitionMatrix P({{0.8, 0.2}, {0.8, 0.2}});
    const cp::OutcomeDistribution q({0.4, 0.6});

    c.expect_close("coupling K", 0.25, cp::coupling_coefficient(P), 1e-12);

    const cp::InterferenceProfile profile = cp::interference_coefficients(p, P, q);
    c.expect_close("lambda1", -0.5, profile.lambdas[0], 1e-12);
    c.expect_close("lambda2", 2.0, profile.lambdas[1], 1e-12);
    c.expect(profile.behaviour == cp::Behaviour::HyperTrigonometric,
             "behaviour: expected HT, got " + cp::to_string(profile.behaviour));
    c.expect(profile.phases[0].kind == cp::PhaseKind::Cos, "phase 1 must be trigonometric");
    c.expect_close("phase1", 2.0 * pi / 3.0, profile.phases[0].theta, 1e-12);
    c.expect(profile.phases[1].kind == cp::PhaseKind::Cosh, "phase 2 must be hyperbolic");
    c.expect_close("phase2", std::log(2.0 + std::sqrt(3.0)), profile.phases[1].theta, 1e-10);

    const cp::OutcomeDistribution back =
        cp::forward_transform(p, P, cp::profile_from_lambdas(p, P, -0.5, 2.0));
    c.expect_close("forward q1", 0.4, back[0], 1e-12);
    c.expect_close("forward q2", 0.6, back[1], 1e-12);
}

// ------------------------------------------------------------- criterion 4

void criterion_simulation_convergence(Checker& c) {
    const auto start = std::chrono::steady_clock::now();

    cp::EnsembleScenario scenario{{{{0.2, 0.3}, {0.2, 0.3}}},
                                  cp::TransitionMatrix({{0.8, 0.2}, {0.8, 0.2}}),
                                  1000000,
                                  20240801,
                                  32,
                                  false};
    const cp::ConvergenceTrace trace =
        cp::convergence_study(scenario, {1000000}, cp::RunMode::Parallel);
    const cp::ConvergenceSummary& summary = trace.summaries.front();
    c.expect(summary.valid_points == 32,
             "expected 32 valid replications, got " + std::to_string(summary.valid_points));
    c.expect_close("mean lambda1", -0.5, summary.lambda_mean[0], 0.015);
    c.expect_close("mean lambda2", 2.0, summary.lambda_mean[1], 0.015);

    const cp::EnsembleScenario neutral = cp::make_pass_through_scenario(
        cp::ContextDistribution({0.5, 0.5}), cp::TransitionMatrix({{0.4, 0.6}, {0.6, 0.4}}),
        1000000, 20240802, 32);
    const cp::ConvergenceTrace neutral_trace =
        cp::convergence_study(neutral, {1000000}, cp::RunMode::Parallel);
    c.expect(std::abs(neutral_trace.summaries.front().lambda_mean[0]) < 0.01,
             "pass-through mean lambda1 must vanish, got " +
                 num(neutral_trace.summaries.front().lambda_mean[0]));
    c.expect(std::abs(neutral_trace.summaries.front().lambda_mean[1]) < 0.01,
             "pass-through mean lambda2 must vanish, got " +
                 num(neutral_trace.summaries.front().lambda_mean[1]));

    // The OpenMP path must agree with the serial reference bit for bit.
    cp::EnsembleScenario small = scenario;
    small.n = 100000;
    small.replications = 8;
    const std::string serial_csv =
        cp::trace_to_csv(cp::convergence_study(small, {100000}, cp::RunMode::Serial));
    const std::string parallel_csv =
        cp::trace_to_csv(cp::convergence_study(small, {100000}, cp::RunMode::Parallel));
    c.expect(serial_csv == parallel_csv, "serial and parallel traces differ");

    const double elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(elapsed_s < 30.0, "simulation took " + num(elapsed_s) + " s, limit 30 s");
}

// ------------------------------------------------------------- criterion 5

void criterion_decoherence(Checker& c) {
    const double shift = 0.1;
    const cp::EnsembleScenario scenario = cp::make_decoherence_scenario(
        cp::ContextDistribution({0.7, 0.3}), cp::TransitionMatrix({{0.5, 0.5}, {0.5, 0.5}}),
        shift, 1000000, 20240803, 8);

    const cp::InterferenceProfile analytic = cp::analytic_profile(scenario);
    c.expect_close("analytic lambda1", 0.0, analytic.lambdas[0], 1e-12);
    c.expect_close("analytic lambda2", 0.0, analytic.lambdas[1], 1e-12);

    double lambda_mean[2] = {0.0, 0.0};
    double moved_mean = 0.0;
    const int reps = scenario.replications;
    for (int r = 0; r < reps; ++r) {
        const cp::CountTable counts = cp::simulate_counts(scenario, static_cast<std::uint64_t>(r));
        const cp::InterferenceProfile profile = cp::empirical_profile(counts);
        for (std::size_t j = 0; j < 2; ++j) {
            c.expect(std::abs(profile.lambdas[j]) < 0.02,
                     "replication " + std::to_string(r) + ": |lambda" + std::to_string(j + 1) +
                         "| = " + num(std::abs(profile.lambdas[j])) + " >= 0.02");
            lambda_mean[j] += profile.lambdas[j] / reps;
        }
        double moved = 0.0;
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                const double diff = std::abs(static_cast<double>(counts.n_counts[i][j]) -
                                             static_cast<double>(counts.m_counts[i][j]));
                moved = std::max(moved, diff / static_cast<double>(counts.total));
            }
        }
        moved_mean += moved / reps;
    }
    c.expect(std::abs(lambda_mean[0]) < 0.01,
             "mean lambda1 = " + num(lambda_mean[0]) + ", expected |.| < 0.01");
    c.expect(std::abs(lambda_mean[1]) < 0.01,
             "mean lambda2 = " + num(lambda_mean[1]) + ", expected |.| < 0.01");
    c.expect(moved_mean > shift / 2.0,
             "mean max |Delta_ij|/N = " + num(moved_mean) + ", expected > " + num(shift / 2.0));
}

// ------------------------------------------------------------- criterion 6

void criterion_complex_unitarity(Checker& c) {
    cp::rng::UnitUniform u(60601);
    int counterexamples = 0;
    int checked_unitaries = 0;

    for (int i = 0; i < 1000; ++i) {
        const int family = i % 3;
        const double g21 = uniform_in(u, -pi, pi);
        const double g12 = uniform_in(u, -pi, pi);
        const double g22 = uniform_in(u, -pi, pi);
        double g11 = g21 + (g12 - g22) - pi;  // exact unitarity phase
        bool expect_unitary = true;

        std::vector<std::vector<double>> rows;
        if (family == 2) {
            // Not double stochastic by a safe margin; phases stay aligned.
            const double a = uniform_in(u, 0.2, 0.8);
            const double delta = (u.next() < 0.5 ? -1.0 : 1.0) * uniform_in(u, 0.05, 0.15);
            const double b = 1.0 - a + delta;
            rows = {{a, 1.0 - a}, {b, 1.0 - b}};
            expect_unitary = false;
        } else {
            const double t = uniform_in(u, 0.05, 0.95);
            rows = {{t, 1.0 - t}, {1.0 - t, t}};
            if (family == 1) {
                g11 += (u.next() < 0.5 ? -1.0 : 1.0) * uniform_in(u, 1e-3, 1.0);
                expect_unitary = false;
            }
        }

        const cp::TransitionAmplitudeMatrix U = cp::matrix_from_probabilities(
            cp::TransitionMatrix(rows), {{{g11, g12}, {g21, g22}}});
        if (cp::is_unitary(U, 1e-10) != expect_unitary) {
            ++counterexamples;
            continue;
        }

        if (expect_unitary && i % 10 == 0) {
            // Unitary matrices must preserve normalization for every state.
            const double s = uniform_in(u, 0.05, 0.95);
            const cp::AmplitudeVector alpha = cp::amplitudes_from_context(
                cp::ContextDistribution({s, 1.0 - s}),
                {uniform_in(u, -pi, pi), uniform_in(u, -pi, pi)});
            if (std::abs(cp::normalization_defect(alpha, U)) > 1e-12) ++counterexamples;
            ++checked_unitaries;
        }
    }
    c.expect(counterexamples == 0,
             std::to_string(counterexamples) + " counterexamples to the unitarity criterion");
    c.expect(checked_unitaries > 20, "defect spot checks did not run");
}

// ------------------------------------------------------------- criterion 7

void criterion_g_unitarity(Checker& c) {
    cp::rng::UnitUniform u(70701);
    constexpr std::array<std::array<std::array<int, 2>, 2>, 4> odd_patterns = {{
        {{{1, 1}, {1, -1}}},
        {{{1, 1}, {-1, 1}}},
        {{{1, -1}, {1, 1}}},
        {{{-1, 1}, {1, 1}}},
    }};
    int counterexamples = 0;

    for (int i = 0; i < 1000; ++i) {
        const int family = i % 4;
        const double t = uniform_in(u, 0.05, 0.95);
        const double base = uniform_in(u, -2.0, 2.0);
        const double g2_low = uniform_in(u, -1.0, 1.0);

        std::vector<std::vector<double>> rows = {{t, 1.0 - t}, {1.0 - t, t}};
        std::array<std::array<int, 2>, 2> signs =
            odd_patterns[static_cast<std::size_t>(u.next() * 4.0)];
        // gamma_diff(0) = base always; gamma_diff(1) = base unless detuned.
        std::array<std::array<double, 2>, 2> gamma = {
            {{base + g2_low, base + g2_low}, {g2_low, g2_low}}};
        bool expect_unitary = true;

        if (family == 1) {
            gamma[0][1] += (u.next() < 0.5 ? -1.0 : 1.0) * uniform_in(u, 1e-3, 1.0);
            expect_unitary = false;
        } else if (family == 2) {
            signs = {{{1, 1}, {1, 1}}};  // sigma = +1
            expect_unitary = false;
        } else if (family == 3) {
            const double a = uniform_in(u, 0.2, 0.8);
            const double delta = (u.next() < 0.5 ? -1.0 : 1.0) * uniform_in(u, 0.05, 0.15);
            const double b = 1.0 - a + delta;
            rows = {{a, 1.0 - a}, {b, 1.0 - b}};
            expect_unitary = false;
        }

        const cp::GTransitionMatrix U =
            cp::g_matrix_from_probabilities(cp::TransitionMatrix(rows), signs, gamma);
        const cp::GUnitarityReport report = cp::g_unitary_characterization(U, 1e-10);
        if (cp::g_is_unitary(U, 1e-10) != expect_unitary) ++counterexamples;
        if (report.unitary != expect_unitary) ++counterexamples;
        if (report.unitary !=
            (report.double_stochastic && report.sigma_ok && report.phase_ok)) {
            ++counterexamples;
        }
    }
    c.expect(counterexamples == 0,
             std::to_string(counterexamples) + " counterexamples to the G-unitarity criterion");
}

// ------------------------------------------------------------- criterion 8

void criterion_witnesses(Checker& c) {
    // (a) A complex matrix on the memory solution family: not unitary, yet
    // one specific state family keeps normalization; detuning the state
    // breaks it macroscopically.
    {
        const double eta = pi / 4.0;
        const double gamma_common = pi / 4.0;  // memory family at gamma2 = pi/4: gamma1 = pi/4
        const cp::TransitionMatrix P({{0.3, 0.7}, {0.7, 0.3}});
        const cp::TransitionAmplitudeMatrix U = cp::matrix_from_probabilities(
            P, {{{gamma_common, gamma_common}, {0.0, 0.0}}});
        c.expect(!cp::is_unitary(U, 1e-10), "memory-family witness must not be unitary");

        const cp::ContextDistribution p({0.5, 0.5});
        const cp::AmplitudeVector matched = cp::amplitudes_from_context(p, {eta, 0.0});
        const double matched_defect = cp::normalization_defect(matched, U);
        c.expect(std::abs(matched_defect) <= 1e-12,
                 "matched state defect = " + num(matched_defect) + ", expected ~0");
        bool born_ok = true;
        try {
            cp::born(cp::compose(matched, U));
        } catch (const cp::Error&) {
            born_ok = false;
        }
        c.expect(born_ok, "matched state must produce a valid outcome distribution");

        const cp::AmplitudeVector detuned = cp::amplitudes_from_context(p, {eta + 0.3, 0.0});
        const double detuned_defect = cp::normalization_defect(detuned, U);
        c.expect(std::abs(detuned_defect) >= 1e-3,
                 "detuned state defect = " + num(detuned_defect) + ", expected macroscopic");
        bool rejected = false;
        try {
            cp::born(cp::compose(detuned, U));
        } catch (const cp::NotDecomposable&) {
            rejected = true;
        }
        c.expect(rejected, "detuned state must fail the normalization check");
    }

    // (b) A G-unitary matrix composed with a decomposable state can still
    // leave [0, 1]: G-unitarity does not guarantee positivity.
    {
        const cp::GTransitionMatrix had = cp::g_matrix_from_probabilities(
            cp::TransitionMatrix({{0.5, 0.5}, {0.5, 0.5}}), {{{1, 1}, {1, -1}}},
            {{{0.0, 0.0}, {0.0, 0.0}}});
        c.expect(cp::g_is_unitary(had, 1e-10), "G-Hadamard pattern must be G-unitary");

        const double xi = std::acosh(cp::admissible_h_phase_bound(0.25, 0.5)) + 0.5;
        const cp::GAmplitudeVector alpha = cp::g_amplitudes_from_context(
            cp::ContextDistribution({0.25, 0.75}), {1, 1}, {0.0, xi});
        c.expect(cp::g_is_decomposable(alpha), "witness state must be decomposable");

        bool rejected = false;
        try {
            cp::g_born(cp::g_compose(alpha, had));
        } catch (const cp::NonphysicalState&) {
            rejected = true;
        }
        c.expect(rejected, "composition past the phase bound must raise NonphysicalState");
    }
}

// ------------------------------------------------------------- criterion 9

void criterion_algebra_suite(Checker& c) {
    cp::rng::UnitUniform u(90901);
    int violations = 0;
    const auto close = [](double l, double r, double tol) {
        return std::abs(l - r) <= tol * (1.0 + std::max(std::abs(l), std::abs(r)));
    };
    const auto close_g = [&](const cp::HyperbolicNumber& l, const cp::HyperbolicNumber& r,
                             double tol) { return close(l.x, r.x, tol) && close(l.y, r.y, tol); };

    for (int i = 0; i < 10000; ++i) {
        const cp::HyperbolicNumber a{uniform_in(u, -10, 10), uniform_in(u, -10, 10)};
        const cp::HyperbolicNumber b{uniform_in(u, -10, 10), uniform_in(u, -10, 10)};
        const cp::HyperbolicNumber z{uniform_in(u, -10, 10), uniform_in(u, -10, 10)};

        // Rounding in a product identity scales with the operand magnitudes, not
        // with the (possibly cancelling) result, so the slack must too.
        const auto mag2 = [](const cp::HyperbolicNumber& h) { return h.x * h.x + h.y * h.y; };
        const auto close_slack = [](const cp::HyperbolicNumber& l, const cp::HyperbolicNumber& r,
                                    double slack) {
            return std::abs(l.x - r.x) <= slack && std::abs(l.y - r.y) <= slack;
        };
        const double mab = std::sqrt(mag2(a) * mag2(b));

        if (!close_g((a + b) + z, a + (b + z), 1e-12)) ++violations;
        if (!close_g(a * b, b * a, 1e-14)) ++violations;
        if (!close_slack((a * b) * z, a * (b * z), 1e-12 * (1.0 + mab * std::sqrt(mag2(z)))))
            ++violations;
        if (!close_slack(a * (b + z), a * b + a * z,
                         1e-12 * (1.0 + std::sqrt(mag2(a) * (mag2(b) + mag2(z))))))
            ++violations;
        if (!(conj(a * b) == conj(a) * conj(b))) ++violations;
        if (std::abs(sq_norm(a * b) - sq_norm(a) * sq_norm(b)) > 1e-12 * (1.0 + mab * mab))
            ++violations;

        // Unit multiplicative group: the exponential law and its inverse.
        const double s = uniform_in(u, -3, 3);
        const double t = uniform_in(u, -3, 3);
        if (!close_g(cp::h_exp(s) * cp::h_exp(t), cp::h_exp(s + t), 1e-12)) ++violations;

        const int sign = u.next() < 0.5 ? -1 : 1;
        const double modulus = uniform_in(u, 0.1, 3.0);
        const cp::HyperbolicNumber w = static_cast<double>(sign) * modulus * cp::h_exp(s);
        const cp::PolarForm polar_w = cp::polar(w);
        if (polar_w.sign != sign || !close(polar_w.modulus, modulus, 1e-10) ||
            !close(polar_w.phase, s, 1e-9)) {
            ++violations;
        }
        if (!close_g(cp::reconstruct(polar_w), w, 1e-10)) ++violations;
        if (!close_g(w * cp::inverse(w), cp::HyperbolicNumber{1.0, 0.0}, 1e-10)) ++violations;

        // Zero divisors annihilate exactly.
        const cp::HyperbolicNumber null_product =
            cp::HyperbolicNumber{1.0, 1.0} * cp::HyperbolicNumber{1.0, -1.0};
        if (!(null_product == cp::HyperbolicNumber{0.0, 0.0})) ++violations;

        // The positive-norm cone is closed under multiplication.
        if (cp::sq_norm(a) > 0.0 && cp::sq_norm(b) > 0.0) {
            if (cp::sq_norm(a * b) < -1e-9 * (1.0 + std::abs(sq_norm(a) * sq_norm(b)))) {
                ++violations;
            }
        }
    }
    c.expect(violations == 0, std::to_string(violations) + " algebra property violations");
}

// ------------------------------------------------------------ criterion 10

void criterion_multi_valued(Checker& c) {
    cp::rng::UnitUniform u(101001);
    int failures = 0;

    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t m = 2 + static_cast<std::size_t>(iter % 5);

        std::vector<double> p(m);
        double sum = 0.0;
        for (double& v : p) sum += (v = 0.1 + u.next());
        for (double& v : p) v /= sum;

        std::vector<std::vector<double>> rows(m, std::vector<double>(m));
        for (auto& row : rows) {
            double rsum = 0.0;
            for (double& v : row) rsum += (v = 0.1 + u.next());
            for (double& v : row) v /= rsum;
        }

        std::vector<double> q(m);
        double qsum = 0.0;
        for (double& v : q) qsum += (v = 0.1 + u.next());
        for (double& v : q) v /= qsum;

        const cp::ContextDistribution pd(p);
        const cp::TransitionMatrix P(rows);
        const cp::OutcomeDistribution qd(q, 1e-9);
        const cp::InterferenceProfile profile = cp::multi_valued_decomposition(pd, P, qd);

        for (std::size_t i = 0; i < m; ++i) {
            double delta_sum = 0.0;
            for (std::size_t e = 0; e < profile.family.size(); ++e) {
                if (profile.family[e].outcome == i) delta_sum += profile.family[e].delta;
            }
            double averaged = 0.0;
            for (std::size_t k = 0; k < m; ++k) averaged += p[k] * P(k, i);

            // The pairwise deltas must tile the full interference term...
            if (std::abs(delta_sum - (q[i] - averaged)) > 1e-12) ++failures;
            // ...so the outcome probability reconstructs from (p, P, deltas).
            if (std::abs((averaged + delta_sum) - q[i]) > 1e-12) ++failures;
        }

        if (m == 2) {
            const cp::InterferenceProfile direct = cp::interference_coefficients(pd, P, qd);
            for (std::size_t j = 0; j < 2; ++j) {
                if (std::abs(profile.lambdas[j] - direct.lambdas[j]) > 1e-13) ++failures;
            }
        }
    }
    c.expect(failures == 0, std::to_string(failures) + " multi-valued identity failures");
}

// ---------------------------------------------------------------- harness

struct Criterion {
    int number;
    std::string name;
    std::function<void(Checker&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "worked trigonometric example (K = sqrt(2), behaviour T, < 1 ms)",
         criterion_worked_example_a},
        {2, "hyperbolic phase bound saturation and overshoot rejection",
         criterion_hyperbolic_bound},
        {3, "disturbance coupling example (K = 1/4, lambda = (-1/2, 2), HT)",
         criterion_disturbance_coupling},
        {4, "frequency simulation converges to the analytic coefficients",
         criterion_simulation_convergence},
        {5, "decoherence: lambdas vanish while count shifts stay macroscopic",
         criterion_decoherence},
        {6, "complex unitarity iff double stochastic with opposed phase columns",
         criterion_complex_unitarity},
        {7, "G-unitarity iff double stochastic, sigma = -1, equal phase columns",
         criterion_g_unitarity},
        {8, "representation witnesses: matched/detuned defect and G positivity failure",
         criterion_witnesses},
        {9, "hyperbolic algebra property suite (10^4 random inputs)",
         criterion_algebra_suite},
        {10, "multi-valued interference identity and reconstruction",
         criterion_multi_valued},
    };

    int failed = 0;
    for (const Criterion& criterion : criteria) {
        Checker checker;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criterion.body(checker);
        } catch (const std::exception& e) {
            checker.ok = false;
            checker.notes.push_back(std::string("unexpected exception: ") + e.what());
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();

        std::cout << (checker.ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.number
                  << ": " << criterion.name << " (" << num(ms) << " ms)\n";
        for (const std::string& note : checker.notes) std::cout << "       - " << note << "\n";
        if (!checker.ok) ++failed;
    }

    if (failed == 0) {
        std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
        return 0;
    }
    std::cout << failed << " of " << criteria.size() << " acceptance criteria failed\n";
    return 1;
}
