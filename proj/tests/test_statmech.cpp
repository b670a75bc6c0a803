#include <doctest.h>

#include <cmath>
#include <vector>

#include "wsnq/deploy.hpp"
#include "wsnq/errors.hpp"
#include "wsnq/statmech.hpp"

using namespace wsnq;
using namespace wsnq::statmech;

TEST_CASE("microstate_count on hand-computed instances") {
    const std::vector<EnergyLevel> levels = {{2.0, 0.0}, {3.0, 1.0}};
    const std::vector<std::uint64_t> occ = {2, 1};
    // Omega = (2^2/2!) * (3^1/1!) = 6
    CHECK(microstate_count(levels, occ) == doctest::Approx(std::log(6.0)).epsilon(1e-12));

    const std::vector<std::uint64_t> zeros = {0, 0};
    CHECK(microstate_count(levels, zeros) == 0.0);

    // Splitting a level changes the count: (2,2) with (1,1) vs (4) with (2).
    const std::vector<EnergyLevel> split = {{2.0, 0.0}, {2.0, 0.0}};
    const std::vector<std::uint64_t> split_occ = {1, 1};
    const std::vector<EnergyLevel> merged = {{4.0, 0.0}};
    const std::vector<std::uint64_t> merged_occ = {2};
    CHECK(microstate_count(split, split_occ) == doctest::Approx(std::log(4.0)));
    CHECK(microstate_count(merged, merged_occ) == doctest::Approx(std::log(8.0)));

    const std::vector<std::uint64_t> mismatched = {1};
    CHECK_THROWS_AS(microstate_count(levels, mismatched), std::invalid_argument);
}

TEST_CASE("log_omega_stirling closed forms and singularities") {
    // k = e*m with N = m gives m*ln(e) + m = 2m.
    for (double m : {1.0, 4.0, 25.0}) {
        const std::vector<EnergyLevel> levels = {{std::exp(1.0) * m, 0.0}};
        const std::vector<double> occ = {m};
        CHECK(log_omega_stirling(levels, occ) == doctest::Approx(2.0 * m).epsilon(1e-12));
    }

    const std::vector<EnergyLevel> one = {{10.0, 0.0}};
    const std::vector<double> fifty = {50.0};
    CHECK(log_omega_stirling(one, fifty) ==
          doctest::Approx(50.0 * std::log(0.2) + 50.0).epsilon(1e-12));
    const std::vector<std::uint64_t> fifty_int = {50};
    CHECK(microstate_count(one, fifty_int) ==
          doctest::Approx(50.0 * std::log(10.0) - log_factorial(50)).epsilon(1e-12));

    const std::vector<EnergyLevel> two = {{2.0, 0.0}, {3.0, 0.0}};
    const std::vector<double> small = {2.0, 1.0};
    CHECK(log_omega_stirling(two, small) ==
          doctest::Approx(std::log(3.0) + 3.0).epsilon(1e-12));

    const std::vector<double> with_zero = {2.0, 0.0};
    CHECK_THROWS_AS(log_omega_stirling(two, with_zero), std::domain_error);
}

TEST_CASE("stirling error structure on randomized instances") {
    UniformRng rng(321);
    for (int trial = 0; trial < 100; ++trial) {
        const int n_levels = 1 + static_cast<int>(rng.next(6.0));
        std::vector<EnergyLevel> levels;
        std::vector<std::uint64_t> occ_int;
        std::vector<double> occ_real;
        double half_log_terms = 0.0;
        double inverse_terms = 0.0;
        for (int i = 0; i < n_levels; ++i) {
            levels.push_back({1.0 + rng.next(50.0), rng.next(3.0)});
            // One small level per instance keeps the analytic slack (which
            // shrinks as 1/N^3) well above summation noise; the rest range up
            // to 1e4.
            const auto n_i = static_cast<std::uint64_t>(1.0 + rng.next(i == 0 ? 100.0 : 1e4));
            occ_int.push_back(n_i);
            occ_real.push_back(static_cast<double>(n_i));
            half_log_terms += 0.5 * std::log(2.0 * M_PI * static_cast<double>(n_i));
            inverse_terms += 1.0 / (12.0 * static_cast<double>(n_i));
        }
        const double gap =
            log_omega_stirling(levels, occ_real) - half_log_terms - microstate_count(levels, occ_int);
        CHECK(gap > 0.0);
        CHECK(gap < inverse_terms);
    }
}

TEST_CASE("gibbs_occupancy") {
    CHECK(gibbs_occupancy(2.0, 0.0, {3.0, 123.0}) == 6.0);
    CHECK(gibbs_occupancy(1.0, 1.0, {1.0, std::log(2.0)}) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("partition_discrete") {
    const std::vector<EnergyLevel> levels = {{2.0, 0.3}, {5.0, 1.1}, {1.0, 2.0}};
    CHECK(partition_discrete(levels, 0.0) == doctest::Approx(8.0).epsilon(1e-14));

    const std::vector<EnergyLevel> single = {{1.0, 1.0}};
    CHECK(partition_discrete(single, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-14));

    // Re-summation oracle in extended precision over random levels.
    UniformRng rng(8);
    std::vector<EnergyLevel> random_levels;
    for (int i = 0; i < 100; ++i) random_levels.push_back({1.0 + rng.next(30.0), rng.next(4.0)});
    const double beta = 0.7;
    long double reference = 0.0L;
    for (const auto& level : random_levels)
        reference += static_cast<long double>(level.k) *
                     expl(-static_cast<long double>(beta) * static_cast<long double>(level.e));
    CHECK(partition_discrete(random_levels, beta) ==
          doctest::Approx(static_cast<double>(reference)).epsilon(1e-14));
}

TEST_CASE("partition_continuum closed form") {
    CHECK(partition_continuum(2.0, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(partition_continuum(2.0, 3.0) ==
          doctest::Approx(partition_continuum(1.0, 3.0) / 4.0).epsilon(1e-14));
    CHECK_THROWS_AS(partition_continuum(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(partition_continuum(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(partition_continuum(1.0, 0.0), std::domain_error);
}

TEST_CASE("normalization identity: a = N/Z makes occupancies sum to N") {
    UniformRng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<EnergyLevel> levels;
        const int n_levels = 2 + static_cast<int>(rng.next(8.0));
        for (int i = 0; i < n_levels; ++i) levels.push_back({1.0 + rng.next(10.0), rng.next(3.0)});
        const double beta = -1.0 + rng.next(3.0);
        const double n_total = 1.0 + rng.next(500.0);
        const double a = n_total / partition_discrete(levels, beta);
        double sum = 0.0;
        for (const auto& level : levels) sum += gibbs_occupancy(a, beta, level);
        CHECK(sum == doctest::Approx(n_total).epsilon(1e-12));
    }
}

TEST_CASE("solve_multipliers two-level closed forms") {
    MaxEntProblem problem;
    problem.levels = {{1.0, 0.0}, {1.0, 1.0}};
    problem.n_total = 10.0;

    SUBCASE("symmetric target forces beta = 0") {
        problem.u_total = 5.0;
        const auto solution = solve_multipliers(problem);
        CHECK(solution.beta == doctest::Approx(0.0).epsilon(1e-8));
        CHECK(solution.a == doctest::Approx(5.0).epsilon(1e-8));
        CHECK(solution.occupancies[0] == doctest::Approx(5.0).epsilon(1e-8));
        CHECK(solution.occupancies[1] == doctest::Approx(5.0).epsilon(1e-8));
    }
    SUBCASE("N2/N1 = 1/3 gives beta = ln 3") {
        problem.u_total = 2.5;
        const auto solution = solve_multipliers(problem);
        CHECK(solution.beta == doctest::Approx(std::log(3.0)).epsilon(1e-7));
        CHECK(solution.occupancies[0] == doctest::Approx(7.5).epsilon(1e-8));
        CHECK(solution.occupancies[1] == doctest::Approx(2.5).epsilon(1e-8));
    }
    SUBCASE("infeasible and boundary targets throw") {
        problem.u_total = 20.0;
        CHECK_THROWS_AS(solve_multipliers(problem), InfeasibleError);
        problem.u_total = -1.0;
        CHECK_THROWS_AS(solve_multipliers(problem), InfeasibleError);
        problem.u_total = 0.0;
        CHECK_THROWS_AS(solve_multipliers(problem), BoundaryError);
        problem.u_total = 10.0;
        CHECK_THROWS_AS(solve_multipliers(problem), BoundaryError);
    }
}

TEST_CASE("mean energy is strictly decreasing in beta") {
    UniformRng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<EnergyLevel> levels = {{1.0 + rng.next(5.0), rng.next(1.0)},
                                           {1.0 + rng.next(5.0), 1.0 + rng.next(2.0)}};
        const int extra = static_cast<int>(rng.next(4.0));
        for (int i = 0; i < extra; ++i) levels.push_back({1.0 + rng.next(5.0), rng.next(3.0)});
        double previous = mean_energy(levels, -8.0);
        for (double beta = -7.5; beta <= 8.0; beta += 0.5) {
            const double current = mean_energy(levels, beta);
            CHECK(current < previous);
            previous = current;
        }
    }
}

TEST_CASE("ne2_product") {
    CHECK(ne2_product(0.0, 3.0) == 0.0);
    CHECK(ne2_product(20.0, 0.397177) == doctest::Approx(3.155007).epsilon(1e-5));
    CHECK(ne2_product(7.0, 2.0 * 1.3) == doctest::Approx(4.0 * ne2_product(7.0, 1.3)).epsilon(1e-14));
    CHECK_THROWS_AS(ne2_product(-1.0, 1.0), std::domain_error);
}

TEST_CASE("conservation_residual") {
    SUBCASE("balanced classes cancel exactly") {
        const ClassStats stats{50, 10, 40, 2.0, 2.0, 2.0};
        CHECK(conservation_residual(stats) == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("Table I row 1") {
        const ClassStats stats{20, 9, 11, 0.397177, 0.327978571, 0.466375794};
        CHECK(conservation_residual(stats) == doctest::Approx(-0.205695).epsilon(1e-4));
    }
    SUBCASE("degenerate single-class network") {
        const ClassStats stats{30, 0, 30, 1.5, 0.0, 1.5};
        CHECK(conservation_residual(stats) == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("q_factor modes and identities") {
    const ClassStats row1{20, 9, 11, 0.397177, 0.327978571, 0.466375794};
    CHECK(q_factor(row1, QMode::AsWritten) == doctest::Approx(1.065210).epsilon(1e-5));
    CHECK(q_factor(row1, QMode::TableConvention) == doctest::Approx(0.93879004).epsilon(1e-5));

    const ClassStats table3_row1{20, 4, 16, 1.338583, 1.156991, 1.520175};
    CHECK(q_factor(table3_row1, QMode::TableConvention) == doctest::Approx(0.8466).epsilon(1e-4));

    SUBCASE("both modes give 1 for equal energies") {
        const ClassStats equal{40, 8, 32, 1.0, 1.0, 1.0};
        CHECK(q_factor(equal, QMode::AsWritten) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(q_factor(equal, QMode::TableConvention) == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("modes are reciprocal and scale-invariant") {
        UniformRng rng(99);
        for (int i = 0; i < 50; ++i) {
            ClassStats stats;
            stats.n_ch = 1.0 + std::floor(rng.next(20.0));
            stats.n_normal = 1.0 + std::floor(rng.next(80.0));
            stats.n_total = stats.n_ch + stats.n_normal;
            stats.e_ch = 0.1 + rng.next(3.0);
            stats.e_normal = 0.1 + rng.next(3.0);
            stats.e_total = (stats.e_ch + stats.e_normal) / 2.0;
            const double as_written = q_factor(stats, QMode::AsWritten);
            const double table = q_factor(stats, QMode::TableConvention);
            CHECK(as_written * table == doctest::Approx(1.0).epsilon(1e-12));

            const double scale = 0.5 + rng.next(10.0);
            ClassStats scaled = stats;
            scaled.e_ch *= scale;
            scaled.e_normal *= scale;
            scaled.e_total *= scale;
            CHECK(q_factor(scaled, QMode::AsWritten) == doctest::Approx(as_written).epsilon(1e-12));

            // Zero residual iff Q(AsWritten) = 1.
            const double residual = conservation_residual(stats);
            CHECK((std::abs(residual) < 1e-12) == (std::abs(as_written - 1.0) < 1e-12));
        }
    }
    SUBCASE("undefined denominators throw") {
        CHECK_THROWS_AS(q_factor({0, 0, 0, 1, 1, 1}, QMode::AsWritten), std::domain_error);
        CHECK_THROWS_AS(q_factor({10, 5, 5, 0, 1, 1}, QMode::AsWritten), std::domain_error);
        CHECK_THROWS_AS(q_factor({10, 5, 5, 1, 0, 0}, QMode::TableConvention), std::domain_error);
    }
}
