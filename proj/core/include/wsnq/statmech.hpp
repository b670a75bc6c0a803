#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wsnq::statmech {

/// One occupancy level: k connections available at expended energy e.
/// When built from the radio model, e = k * E(l,d).
struct EnergyLevel {
    double k = 1.0; // connectivity level, > 0
    double e = 0.0; // expended energy of the state, J, >= 0
};

struct MaxEntProblem {
    std::vector<EnergyLevel> levels;
    double n_total = 0.0; // N, sum of occupancies
    double u_total = 0.0; // U, total expended energy
};

struct MaxEntSolution {
    double a = 0.0;    // multiplier A = N/Z
    double beta = 0.0; // multiplier beta, 1/J (may be negative)
    double z = 0.0;    // partition value at beta
    std::vector<double> occupancies;
};

/// ln N! by direct summation of logarithms (exact up to rounding, no
/// special-function dependency).
double log_factorial(std::uint64_t n);

/// ln Omega with Omega = prod_i k_i^{N_i} / N_i!, integer occupancies.
double microstate_count(std::span<const EnergyLevel> levels,
                        std::span<const std::uint64_t> occupancies);

/// The crude Stirling form ln Omega = sum_i N_i ln(k_i/N_i) + sum_i N_i.
/// Singular at N_i = 0; all occupancies must be positive.
double log_omega_stirling(std::span<const EnergyLevel> levels,
                          std::span<const double> occupancies);

/// N_i = A * k * exp(-beta * e).
double gibbs_occupancy(double a, double beta, const EnergyLevel& level);

/// Z = sum_i k_i * exp(-beta * e_i).
double partition_discrete(std::span<const EnergyLevel> levels, double beta);

/// Continuum limit Z = integral_0^inf k * exp(-beta*k*E) dk = 1/(beta*E)^2.
/// Requires beta > 0 and e_unit > 0 (the integral diverges otherwise).
double partition_continuum(double beta, double e_unit);

/// Mean energy per node <e>(beta) = sum k_i e_i exp(-beta e_i) / Z(beta),
/// computed with an exponent shift so large |beta| stays finite. Strictly
/// decreasing in beta when the levels carry >= 2 distinct energies.
double mean_energy(std::span<const EnergyLevel> levels, double beta);

/// Solve for (A, beta) such that occupancies A*k_i*exp(-beta*e_i) meet both
/// constraints sum N_i = N and sum N_i e_i = U. Bisection on the monotone
/// mean-energy curve, bracket grown geometrically from [-64, 64] 1/J,
/// terminating at |U(beta) - U| <= 1e-9 * max(1, |U|).
MaxEntSolution solve_multipliers(const MaxEntProblem& problem);

/// n * e^2.
double ne2_product(double n, double e);

/// The Table-I-shaped class record. When ingested from external tables
/// nothing is assumed about internal consistency.
struct ClassStats {
    double n_total = 0.0;
    double n_ch = 0.0;
    double n_normal = 0.0;
    double e_total = 0.0;  // J
    double e_ch = 0.0;     // J
    double e_normal = 0.0; // J
};

/// N_T*E_T^2 - (N_ch*E_ch^2 + N_n*E_n^2), signed.
double conservation_residual(const ClassStats& stats);

enum class QMode {
    AsWritten,       // (N_ch*E_ch^2 + N_n*E_n^2) / (N_T*E_T^2)
    TableConvention, // the reciprocal; reproduces the printed Q columns
};

double q_factor(const ClassStats& stats, QMode mode);

} // namespace wsnq::statmech
