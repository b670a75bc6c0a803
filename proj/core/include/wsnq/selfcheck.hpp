#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsnq/statmech.hpp"

namespace wsnq::selfcheck {

/// Adaptive-Simpson quadrature of integral_0^inf k * exp(-beta*e_unit*k) dk,
/// truncated where the integrand drops below 1e-18. Independent of the
/// closed-form path it is used to check.
double integrate_partition_tail(double beta, double e_unit);

struct QuadratureCase {
    double beta;
    double e_unit;
    double closed_form;
    double quadrature;
    double relative_error;
    bool pass;
};

/// Compare partition_continuum against quadrature over beta, E in {0.1, 1, 10}.
std::vector<QuadratureCase> quadrature_grid_check(double tolerance = 1e-6);

/// Exhaustive search over integer compositions (sum N, sum n_i*e_i == U) for
/// the ln-Omega maximizer. Energies must be non-negative integers.
struct EnumerationResult {
    bool feasible = false;
    std::vector<std::uint64_t> occupancies;
    double log_omega = 0.0;
};
EnumerationResult enumerate_max_omega(const std::vector<statmech::EnergyLevel>& levels,
                                      int n_total, int u_total);

struct EnumerationCase {
    std::vector<statmech::EnergyLevel> levels;
    int n_total;
    int u_total;
    std::vector<std::uint64_t> oracle;
    std::vector<double> solver;
    bool pass;
};

/// Every 3-level instance with k in {1,2,3}, e = (0,1,2), N in {4,6,8} and
/// each interior integer-feasible U: the rounded solver occupancies must land
/// within +-1 per level of the enumeration maximizer, and the solution must
/// satisfy its own residual invariants.
std::vector<EnumerationCase> enumeration_check();

/// Normalization identity: occupancies built with a = N/Z sum back to N
/// within 1e-12 relative, over randomized level sets.
bool normalization_check(std::uint64_t seed = 7, int instances = 50);

struct MaxentReport {
    bool all_pass = false;
    std::vector<std::string> lines;
};

/// The full invariant suite behind the `maxent-check` command.
MaxentReport run_maxent_checks();

} // namespace wsnq::selfcheck
