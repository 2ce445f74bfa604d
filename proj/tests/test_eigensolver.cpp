#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "cmsep/cmsep.hpp"

using namespace cmsep;

TEST_CASE("ground state at equal masses", "[eigensolver]") {
    const auto gs = ground_state_energy(1.0, 1e-9);
    CHECK_THAT(gs.energy, Catch::Matchers::WithinAbs(1.0603620904842, 2e-9));
    CHECK(gs.beta == 1.0);
    CHECK(gs.residual <= 1e-9);
    CHECK(gs.basis_size >= 32);
    CHECK_THAT(gs.basis_frequency,
               Catch::Matchers::WithinRel(2.8844991406148166, 1e-14));
}

TEST_CASE("scaling law in beta", "[eigensolver]") {
    SECTION("scaled value at beta = 3") {
        const auto gs = ground_state_energy(3.0, 1e-9);
        CHECK_THAT(gs.energy, Catch::Matchers::WithinAbs(1.6832198980, 5e-9));
    }
    SECTION("rescaled energy is beta-independent") {
        const double ref = ground_state_energy(1.0, 1e-10).energy;
        for (double beta : {0.1, 0.5, 1.0, 2.0, 4.0}) {
            const double e = ground_state_energy(beta, 1e-10).energy;
            const double rescaled = e * std::pow(2.0 / (beta + 1.0), 2.0 / 3.0);
            INFO("beta=" << beta);
            CHECK(std::abs(rescaled - ref) <= 1e-7);
        }
    }
}

TEST_CASE("cross-method agreement with the grid solver", "[eigensolver]") {
    for (double beta : {0.5, 1.0, 2.0}) {
        const double basis = ground_state_energy(beta, 1e-10).energy;
        const double grid = grid_ground_energy(beta);
        INFO("beta=" << beta);
        CHECK(std::abs(basis - grid) <= 1e-7);
    }
    CHECK_THROWS_AS(grid_ground_energy(0.0), std::domain_error);
    CHECK_THROWS_AS(grid_ground_energy(1.0, 2), std::domain_error);
    CHECK_THROWS_AS(grid_ground_energy(1.0, 100, -1.0), std::domain_error);
}

TEST_CASE("variational bound and constant trial-error ratio", "[eigensolver]") {
    for (double beta : {0.05, 0.3, 1.0, 2.5}) {
        const double e0 = ground_state_energy(beta, 1e-10).energy;
        const double wr = minimize_rel(beta).energy;
        INFO("beta=" << beta);
        CHECK(e0 < wr);
        // The Gaussian trial's relative error is beta-independent by scaling.
        CHECK_THAT(wr / e0, Catch::Matchers::WithinAbs(1.0201111370, 1e-6));
    }
}

TEST_CASE("parity structure of the basis", "[eigensolver]") {
    SECTION("ground state lives in the even block") {
        const double even = basis_ground_energy(1.0, 64, Parity::Even);
        const double odd = basis_ground_energy(1.0, 64, Parity::Odd);
        CHECK(even < odd);
    }
    SECTION("tiny even blocks reproduce the Gaussian optimum") {
        // The basis frequency equals the variational width, so the first even
        // basis function is the optimal Gaussian itself; and with that choice
        // the 0-2 coupling element vanishes, making the 2x2 block no better.
        const double wr = minimize_rel(1.0).energy;
        CHECK_THAT(basis_ground_energy(1.0, 1), Catch::Matchers::WithinRel(wr, 1e-12));
        CHECK_THAT(basis_ground_energy(1.0, 2), Catch::Matchers::WithinRel(wr, 1e-12));
    }
}

TEST_CASE("convergence study", "[eigensolver]") {
    SECTION("monotone non-increasing and Cauchy") {
        const auto rows = convergence_study(1.0, {8, 16, 32, 64});
        REQUIRE(rows.size() == 4);
        for (std::size_t i = 1; i < rows.size(); ++i)
            CHECK(rows[i].second <= rows[i - 1].second);
        const double converged = ground_state_energy(1.0, 1e-10).energy;
        CHECK(std::abs(rows.back().second - converged) <= 1e-8);
        CHECK(rows.back().second <= rows.front().second);
    }
    SECTION("any truncation is an upper bound") {
        const auto rows = convergence_study(1.0, {2});
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].second >= ground_state_energy(1.0, 1e-10).energy);
    }
    SECTION("argument validation") {
        CHECK_THROWS_AS(convergence_study(1.0, {}), std::domain_error);
        CHECK_THROWS_AS(convergence_study(1.0, {1, 4}), std::domain_error);
        CHECK_THROWS_AS(convergence_study(1.0, {8, 8}), std::domain_error);
        CHECK_THROWS_AS(convergence_study(1.0, {16, 8}), std::domain_error);
        CHECK_THROWS_AS(convergence_study(-1.0, {8, 16}), std::domain_error);
    }
}

TEST_CASE("solver argument validation and exhaustion", "[eigensolver]") {
    CHECK_THROWS_AS(ground_state_energy(0.0, 1e-9), std::domain_error);
    CHECK_THROWS_AS(ground_state_energy(-2.0, 1e-9), std::domain_error);
    CHECK_THROWS_AS(ground_state_energy(1.0, 1e-13), std::domain_error);
    try {
        ground_state_energy(1.0, 1e-9, 16); // one level only: cannot compare
        FAIL("expected convergence_error");
    } catch (const convergence_error& e) {
        REQUIRE(e.best_params().size() == 1);
        CHECK(e.best_params()[0] == 1.0);
        CHECK(e.iterations() == 16);
        CHECK(e.best_value() >= 1.0603620904841829); // still an upper bound
    }
}
