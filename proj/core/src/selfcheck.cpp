#include "wsnq/selfcheck.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "wsnq/deploy.hpp"

namespace wsnq::selfcheck {

namespace {

double integrand(double k, double c) { return k * std::exp(-c * k); }

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb, double whole,
                        double tol, double c, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = integrand(lm, c);
    const double frm = integrand(rm, c);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive_simpson(a, m, fa, flm, fm, left, tol / 2.0, c, depth - 1) +
           adaptive_simpson(m, b, fm, frm, fb, right, tol / 2.0, c, depth - 1);
}

} // namespace

double integrate_partition_tail(double beta, double e_unit) {
    if (!(beta > 0.0) || !(e_unit > 0.0))
        throw std::domain_error("integrate_partition_tail: beta and e_unit must be > 0");
    const double c = beta * e_unit;
    double upper = 1.0 / c;
    while (integrand(upper, c) > 1e-18) upper *= 2.0;

    // Split at the integrand's mode so the adaptive pass starts well shaped.
    const double mode = 1.0 / c;
    const double scale = 1.0 / (c * c); // rough magnitude of the result
    double total = 0.0;
    const double pieces[3] = {0.0, mode, upper};
    for (int i = 0; i + 1 < 3; ++i) {
        const double a = pieces[i];
        const double b = pieces[i + 1];
        const double fa = integrand(a, c);
        const double fb = integrand(b, c);
        const double fm = integrand(0.5 * (a + b), c);
        total += adaptive_simpson(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), 1e-10 * scale,
                                  c, 48);
    }
    return total;
}

std::vector<QuadratureCase> quadrature_grid_check(double tolerance) {
    const double grid[3] = {0.1, 1.0, 10.0};
    std::vector<QuadratureCase> cases;
    for (double beta : grid) {
        for (double e_unit : grid) {
            QuadratureCase c;
            c.beta = beta;
            c.e_unit = e_unit;
            c.closed_form = statmech::partition_continuum(beta, e_unit);
            c.quadrature = integrate_partition_tail(beta, e_unit);
            c.relative_error = std::abs(c.quadrature - c.closed_form) / c.closed_form;
            c.pass = c.relative_error <= tolerance;
            cases.push_back(c);
        }
    }
    return cases;
}

EnumerationResult enumerate_max_omega(const std::vector<statmech::EnergyLevel>& levels,
                                      int n_total, int u_total) {
    EnumerationResult result;
    std::vector<std::uint64_t> occupancies(levels.size(), 0);

    // Depth-first over compositions; energies are small non-negative integers.
    auto recurse = [&](auto&& self, std::size_t index, int remaining_n, int remaining_u) -> void {
        if (index + 1 == levels.size()) {
            const int e = static_cast<int>(levels[index].e);
            if (remaining_n * e != remaining_u) return;
            occupancies[index] = static_cast<std::uint64_t>(remaining_n);
            const double log_omega = statmech::microstate_count(levels, occupancies);
            if (!result.feasible || log_omega > result.log_omega) {
                result.feasible = true;
                result.log_omega = log_omega;
                result.occupancies = occupancies;
            }
            return;
        }
        const int e = static_cast<int>(levels[index].e);
        for (int n = 0; n <= remaining_n; ++n) {
            if (n * e > remaining_u) break;
            occupancies[index] = static_cast<std::uint64_t>(n);
            self(self, index + 1, remaining_n - n, remaining_u - n * e);
        }
    };
    recurse(recurse, 0, n_total, u_total);
    return result;
}

std::vector<EnumerationCase> enumeration_check() {
    std::vector<EnumerationCase> cases;
    for (int k1 = 1; k1 <= 3; ++k1) {
        for (int k2 = 1; k2 <= 3; ++k2) {
            for (int k3 = 1; k3 <= 3; ++k3) {
                const std::vector<statmech::EnergyLevel> levels = {
                    {double(k1), 0.0}, {double(k2), 1.0}, {double(k3), 2.0}};
                for (int n : {4, 6, 8}) {
                    for (int u = 1; u <= 2 * n - 1; ++u) {
                        EnumerationCase c;
                        c.levels = levels;
                        c.n_total = n;
                        c.u_total = u;
                        const EnumerationResult oracle = enumerate_max_omega(levels, n, u);
                        const statmech::MaxEntSolution solution = statmech::solve_multipliers(
                            {levels, double(n), double(u)});
                        c.oracle = oracle.occupancies;
                        c.solver = solution.occupancies;

                        bool ok = oracle.feasible;
                        for (std::size_t i = 0; ok && i < levels.size(); ++i) {
                            const double rounded = std::round(solution.occupancies[i]);
                            ok = std::abs(rounded - double(oracle.occupancies[i])) <= 1.0;
                        }
                        // Residual invariants of the solution itself.
                        double sum_n = 0.0, sum_u = 0.0;
                        for (std::size_t i = 0; i < levels.size(); ++i) {
                            sum_n += solution.occupancies[i];
                            sum_u += solution.occupancies[i] * levels[i].e;
                            const double direct = statmech::gibbs_occupancy(
                                solution.a, solution.beta, levels[i]);
                            ok = ok && std::abs(direct - solution.occupancies[i]) <=
                                           1e-12 * std::max(1.0, std::abs(direct));
                        }
                        ok = ok && std::abs(sum_n - n) <= 1e-9 * n;
                        ok = ok && std::abs(sum_u - u) <= 1e-6 * u;
                        c.pass = ok;
                        cases.push_back(std::move(c));
                    }
                }
            }
        }
    }
    return cases;
}

bool normalization_check(std::uint64_t seed, int instances) {
    UniformRng rng(seed);
    for (int i = 0; i < instances; ++i) {
        const int n_levels = 2 + static_cast<int>(rng.next(7.0));
        std::vector<statmech::EnergyLevel> levels;
        for (int j = 0; j < n_levels; ++j) {
            levels.push_back({1.0 + rng.next(20.0), rng.next(5.0)});
        }
        const double beta = -2.0 + rng.next(4.0);
        const double n_total = 1.0 + rng.next(1000.0);
        const double a = n_total / statmech::partition_discrete(levels, beta);
        double sum = 0.0;
        for (const auto& level : levels) sum += statmech::gibbs_occupancy(a, beta, level);
        if (std::abs(sum - n_total) > 1e-12 * n_total) return false;
    }
    return true;
}

MaxentReport run_maxent_checks() {
    MaxentReport report;
    char buf[256];
    bool all = true;

    const auto quad = quadrature_grid_check();
    int quad_failures = 0;
    double quad_worst = 0.0;
    for (const auto& c : quad) {
        quad_worst = std::max(quad_worst, c.relative_error);
        if (!c.pass) ++quad_failures;
    }
    std::snprintf(buf, sizeof buf,
                  "quadrature grid: %zu cases, max relative error %.3e (%s)", quad.size(),
                  quad_worst, quad_failures == 0 ? "pass" : "FAIL");
    report.lines.push_back(buf);
    all = all && quad_failures == 0;

    const bool norm = normalization_check();
    report.lines.push_back(std::string("normalization identity over randomized levels: ") +
                           (norm ? "pass" : "FAIL"));
    all = all && norm;

    const auto enumeration = enumeration_check();
    int enum_failures = 0;
    for (const auto& c : enumeration) {
        if (!c.pass) ++enum_failures;
    }
    std::snprintf(buf, sizeof buf, "enumeration oracle: %zu instances, %d failures (%s)",
                  enumeration.size(), enum_failures, enum_failures == 0 ? "pass" : "FAIL");
    report.lines.push_back(buf);
    all = all && enum_failures == 0;

    report.all_pass = all;
    return report;
}

} // namespace wsnq::selfcheck
