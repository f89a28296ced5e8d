// Compares the serial reference of convergence_study against the
// OpenMP-parallel path: wall time for each, and a bitwise check that both
// produce the same trace (they must: every replication owns its own stream).

#include <bit>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "contextprob/simulator.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cp = contextprob;

namespace {

bool same_bits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool identical(const cp::ConvergenceTrace& a, const cp::ConvergenceTrace& b) {
    if (cp::trace_to_csv(a) != cp::trace_to_csv(b)) return false;
    if (a.summaries.size() != b.summaries.size()) return false;
    for (std::size_t i = 0; i < a.summaries.size(); ++i) {
        const auto& sa = a.summaries[i];
        const auto& sb = b.summaries[i];
        if (sa.ensemble_size != sb.ensemble_size || sa.valid_points != sb.valid_points) return false;
        for (std::size_t j = 0; j < 2; ++j) {
            if (!same_bits(sa.lambda_mean[j], sb.lambda_mean[j]) ||
                !same_bits(sa.lambda_stddev[j], sb.lambda_stddev[j])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel replication engine benchmark"};
    std::uint64_t n = 200000;
    int replications = 32;
    std::uint64_t seed = 20240614;
    app.add_option("--n", n, "largest ensemble size");
    app.add_option("--replications", replications, "replications per ensemble size");
    app.add_option("--seed", seed, "base seed");
    CLI11_PARSE(app, argc, argv);

    const cp::ContextDistribution p({0.5, 0.5});
    const cp::TransitionMatrix conditional({{0.4, 0.6}, {0.6, 0.4}});
    const cp::TransitionMatrix disturbed({{0.8, 0.2}, {0.8, 0.2}});
    const cp::EnsembleScenario scenario =
        cp::scenario_from_conditionals(p, conditional, disturbed, n, seed, replications);
    const std::vector<std::uint64_t> schedule = {n / 100, n / 10, n};

    const auto time_run = [&](cp::RunMode mode, cp::ConvergenceTrace& out) {
        const auto start = std::chrono::steady_clock::now();
        out = cp::convergence_study(scenario, schedule, mode);
        const auto stop = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(stop - start).count();
    };

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP: not enabled in this build\n";
#endif
    std::cout << "schedule: " << schedule[0] << "," << schedule[1] << "," << schedule[2]
              << "  replications: " << replications << "\n";

    cp::ConvergenceTrace serial_trace, parallel_trace;
    const double t_serial = time_run(cp::RunMode::Serial, serial_trace);
    const double t_parallel = time_run(cp::RunMode::Parallel, parallel_trace);

    std::cout << "serial:   " << t_serial << " s\n";
    std::cout << "parallel: " << t_parallel << " s\n";
    std::cout << "speedup:  " << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";

    const bool ok = identical(serial_trace, parallel_trace);
    std::cout << "traces bitwise identical: " << (ok ? "yes" : "NO") << "\n";
    return ok ? 0 : 1;
}
