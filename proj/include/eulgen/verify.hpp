#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eulgen/dynamics.hpp"

namespace eulgen::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // measured residuals / orders
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::string to_text() const;
};

/// suites: lie, generic, thermo, full. Unknown suite names raise
/// std::invalid_argument (a usage error, not a failed report).
Report run_suite(const std::string& suite, const std::vector<int>& sizes, std::uint64_t seed);

// -- reusable sampling recipes and residual measurements ---------------------
// All measurements are d = 2, L = 1, deterministic in (n, seed).

TensorField random_field(const Grid& g, Kind k, std::uint64_t seed, double amp = 1.0, int max_mode = 2);
State random_state(const Grid& g, TauRole role, std::uint64_t seed, int max_mode = 2);
CotState random_cotstate(const Grid& g, std::uint64_t seed, int max_mode = 2);

/// Least-squares slope of log(residual) against log(h); h = 1/n.
double observed_order(const std::vector<int>& sizes, const std::vector<double>& residuals);

double oracle_residual(int n, Kind k, std::uint64_t seed, int max_mode);
double commutator_rule_residual(int n, Kind k, std::uint64_t seed);
double vector_jacobi_residual(int n, std::uint64_t seed);
double strain_identity_residual(int n, std::uint64_t seed);
double cartan_residual_norm(int n, std::uint64_t seed);

double skew_residual_max(int n, TauRole role, std::uint64_t seed, int trials);
double jacobi_constant_residual(int n);
double jacobi_random_residual(int n, std::uint64_t seed);
double b_adjoint_residual(int n, std::uint64_t seed);
double ne_star_de_residual(int n, TauRole role, std::uint64_t seed);
double driving_force_residual(int n, TauRole role, std::uint64_t seed, const DissipationSpec& diss);
std::pair<double, double> noninteraction_max(int n, TauRole role, std::uint64_t seed, const DissipationSpec& diss);

double differential_fd_residual(int n, TauRole role, std::uint64_t seed, int directions);
std::pair<double, double> power_entropy_worst(int n, TauRole role, std::uint64_t seed, int states,
                                              const DissipationSpec& diss);
double vham_closed_residual(int n, std::uint64_t seed);
double vdiss_closed_residual(int n, TauRole role, std::uint64_t seed, const DissipationSpec& diss);
double split_residual_norm(int n, std::uint64_t seed);
double continuity_residual_norm(int n, std::uint64_t seed);
double equilibrium_rhs_norm(int n);
std::pair<double, double> frame_residuals(int n, TauRole role, std::uint64_t seed);

}  // namespace eulgen::verify
