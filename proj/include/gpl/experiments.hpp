#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gpl {

/// Outcome of a named experiment run.  Exit codes: 0 success, 2 some
/// verdict inconclusive, 1 error (raised as an exception to the caller).
struct ExperimentResult {
    int exit_code = 0;
    std::string summary;
    std::vector<std::string> files;
};

/// Heat-kernel decay on a grid window: walk statistics from the origin and
/// the log-log fit of sup_y P^(n)(y) against the predicted -d/2 slope.
struct HeatDecayConfig {
    int d = 1;
    int L = 40;
    double alpha = 0.0;
    double p_prime = 2.0;
    int fit_n0 = 10;
    int fit_n1 = 0;  // 0 = largest even n within the exact sup-decay horizon, capped at 60
    std::int64_t vertex_cap = 30'000'000;
    std::string out_dir = ".";
};

ExperimentResult run_heat_decay(const HeatDecayConfig& cfg);

/// The glued double-grid example: harmonicity of the assembled function,
/// end count, per-copy classification, and a constant control run.
struct GluedExampleConfig {
    int d = 5;
    int L = 10;
    int green_terms = 0;  // 0 = iterate until increments drop below 1e-12
    double alpha = 0.5;   // kernel for the boundary-value pass
    double boundary_tol = 1e-9;
    int boundary_max_n = 64;  // the assembled function is harmonic; few steps needed
    std::vector<double> eps_grid{1e-1, 1e-2};
    std::vector<int> radii;  // empty = default exhaustion
    std::int64_t vertex_cap = 25'000'000;
    std::string out_dir = ".";
};

ExperimentResult run_glued_example(const GluedExampleConfig& cfg);

/// Liouville surrogate on a frontier-free torus: boundary values of a batch
/// of bounded functions must come out constant (the mean).
struct LiouvilleConfig {
    int d = 2;
    int L = 8;
    int random_functions = 20;
    double alpha = 0.5;
    double tol = 1e-11;
    double constancy_tol = 1e-8;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
};

ExperimentResult run_liouville_vanishing(const LiouvilleConfig& cfg);

/// Injection diagnostic: the boundary-value evidence never consults the
/// exponent, so rerunning at q and p must produce byte-identical witnesses.
struct InjectionConfig {
    int d = 5;
    int L = 6;
    double q = 1.0;
    double p = 2.0;
    int green_terms = 0;
    std::vector<double> eps_grid{1e-1, 1e-2};
    std::int64_t vertex_cap = 25'000'000;
    std::string out_dir = ".";
};

ExperimentResult run_injection_diagnostic(const InjectionConfig& cfg);

} // namespace gpl
