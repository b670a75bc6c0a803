#include "wsnq/statmech.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wsnq/errors.hpp"

namespace wsnq::statmech {

namespace {

// Compensated long-double accumulator. The Stirling-vs-exact comparison
// subtracts sums of ~1e5 magnitude that agree to ~1e-5, so the summation
// error here must stay far below double precision of the partial sums.
struct KahanSum {
    long double sum = 0.0L;
    long double carry = 0.0L;

    void add(long double x) {
        const long double y = x - carry;
        const long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

long double log_factorial_impl(std::uint64_t n) {
    KahanSum sum;
    for (std::uint64_t i = 2; i <= n; ++i) sum.add(logl(static_cast<long double>(i)));
    return sum.sum;
}

} // namespace

double log_factorial(std::uint64_t n) { return static_cast<double>(log_factorial_impl(n)); }

double microstate_count(std::span<const EnergyLevel> levels,
                        std::span<const std::uint64_t> occupancies) {
    if (levels.size() != occupancies.size())
        throw std::invalid_argument("microstate_count: levels/occupancies length mismatch");
    KahanSum log_omega;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!(levels[i].k > 0.0)) throw std::domain_error("microstate_count: k must be > 0");
        log_omega.add(static_cast<long double>(occupancies[i]) *
                      logl(static_cast<long double>(levels[i].k)));
        log_omega.add(-log_factorial_impl(occupancies[i]));
    }
    return static_cast<double>(log_omega.sum);
}

double log_omega_stirling(std::span<const EnergyLevel> levels,
                          std::span<const double> occupancies) {
    if (levels.size() != occupancies.size())
        throw std::invalid_argument("log_omega_stirling: levels/occupancies length mismatch");
    KahanSum sum;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const double n_i = occupancies[i];
        if (!(n_i > 0.0))
            throw std::domain_error("log_omega_stirling: occupancies must be > 0 (formula is singular at 0)");
        if (!(levels[i].k > 0.0)) throw std::domain_error("log_omega_stirling: k must be > 0");
        const auto n = static_cast<long double>(n_i);
        sum.add(n * logl(static_cast<long double>(levels[i].k) / n) + n);
    }
    return static_cast<double>(sum.sum);
}

double gibbs_occupancy(double a, double beta, const EnergyLevel& level) {
    return a * level.k * std::exp(-beta * level.e);
}

double partition_discrete(std::span<const EnergyLevel> levels, double beta) {
    if (!std::isfinite(beta)) throw std::domain_error("partition_discrete: beta must be finite");
    double z = 0.0;
    for (const auto& level : levels) z += level.k * std::exp(-beta * level.e);
    return z;
}

double partition_continuum(double beta, double e_unit) {
    if (!(beta > 0.0)) throw std::domain_error("partition_continuum: beta must be > 0");
    if (!(e_unit > 0.0)) throw std::domain_error("partition_continuum: e_unit must be > 0");
    const double be = beta * e_unit;
    return 1.0 / (be * be);
}

namespace {

// Energy reference chosen so every exponent -beta*(e - e_ref) is <= 0.
double shift_reference(std::span<const EnergyLevel> levels, double beta) {
    double e_min = std::numeric_limits<double>::infinity();
    double e_max = -std::numeric_limits<double>::infinity();
    for (const auto& level : levels) {
        e_min = std::min(e_min, level.e);
        e_max = std::max(e_max, level.e);
    }
    return beta >= 0.0 ? e_min : e_max;
}

} // namespace

double mean_energy(std::span<const EnergyLevel> levels, double beta) {
    if (levels.empty()) throw std::domain_error("mean_energy: no levels");
    const double e_ref = shift_reference(levels, beta);
    double weight_sum = 0.0;
    double energy_sum = 0.0;
    for (const auto& level : levels) {
        const double w = level.k * std::exp(-beta * (level.e - e_ref));
        weight_sum += w;
        energy_sum += w * level.e;
    }
    return energy_sum / weight_sum;
}

MaxEntSolution solve_multipliers(const MaxEntProblem& problem) {
    const auto& levels = problem.levels;
    if (levels.size() < 2) throw std::domain_error("solve_multipliers: need >= 2 levels");
    double e_min = std::numeric_limits<double>::infinity();
    double e_max = -std::numeric_limits<double>::infinity();
    for (const auto& level : levels) {
        if (!(level.k > 0.0)) throw std::domain_error("solve_multipliers: k must be > 0");
        if (level.e < 0.0) throw std::domain_error("solve_multipliers: e must be >= 0");
        e_min = std::min(e_min, level.e);
        e_max = std::max(e_max, level.e);
    }
    if (!(e_max > e_min)) throw std::domain_error("solve_multipliers: need >= 2 distinct energies");
    if (!(problem.n_total > 0.0)) throw std::domain_error("solve_multipliers: n_total must be > 0");

    const double n = problem.n_total;
    const double u = problem.u_total;
    if (u < e_min * n || u > e_max * n)
        throw InfeasibleError("solve_multipliers: U outside [min e * N, max e * N]");
    if (u == e_min * n || u == e_max * n)
        throw BoundaryError("solve_multipliers: U on a feasibility boundary, beta diverges");

    const double target = u / n;
    const double tol = 1e-9 * std::max(1.0, std::abs(u));

    // mean_energy is strictly decreasing, so grow the bracket until it straddles.
    double lo = -64.0;
    double hi = 64.0;
    while (mean_energy(levels, lo) < target) {
        lo *= 2.0;
        if (lo < -1e18) throw BoundaryError("solve_multipliers: bracket exhausted (U too close to max)");
    }
    while (mean_energy(levels, hi) > target) {
        hi *= 2.0;
        if (hi > 1e18) throw BoundaryError("solve_multipliers: bracket exhausted (U too close to min)");
    }

    double beta = 0.5 * (lo + hi);
    for (int iter = 0; iter < 400; ++iter) {
        beta = 0.5 * (lo + hi);
        const double residual = n * mean_energy(levels, beta) - u;
        if (std::abs(residual) <= tol) break;
        if (residual > 0.0) {
            lo = beta;
        } else {
            hi = beta;
        }
    }

    MaxEntSolution solution;
    solution.beta = beta;
    const double e_ref = shift_reference(levels, beta);
    double weight_sum = 0.0;
    std::vector<double> weights(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        weights[i] = levels[i].k * std::exp(-beta * (levels[i].e - e_ref));
        weight_sum += weights[i];
    }
    solution.z = partition_discrete(levels, beta);
    solution.a = n / solution.z;
    solution.occupancies.resize(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i)
        solution.occupancies[i] = n * weights[i] / weight_sum;
    return solution;
}

double ne2_product(double n, double e) {
    if (n < 0.0) throw std::domain_error("ne2_product: n must be >= 0");
    if (e < 0.0) throw std::domain_error("ne2_product: e must be >= 0");
    return n * e * e;
}

double conservation_residual(const ClassStats& stats) {
    return ne2_product(stats.n_total, stats.e_total) -
           (ne2_product(stats.n_ch, stats.e_ch) + ne2_product(stats.n_normal, stats.e_normal));
}

double q_factor(const ClassStats& stats, QMode mode) {
    if (!(stats.n_total > 0.0))
        throw std::domain_error("q_factor: undefined, n_total is zero");
    if (!(stats.e_total > 0.0))
        throw std::domain_error("q_factor: undefined, e_total is zero");
    const double numerator =
        ne2_product(stats.n_ch, stats.e_ch) + ne2_product(stats.n_normal, stats.e_normal);
    const double denominator = ne2_product(stats.n_total, stats.e_total);
    if (mode == QMode::AsWritten) return numerator / denominator;
    if (!(numerator > 0.0))
        throw std::domain_error("q_factor: undefined, class-side NE^2 sum is zero");
    return denominator / numerator;
}

} // namespace wsnq::statmech
