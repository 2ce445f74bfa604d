#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "cmsep/cmsep.hpp"

using namespace cmsep;

TEST_CASE("dimensionless reduction", "[oscillator]") {
    SECTION("unit system") {
        const auto m = reduce_to_dimensionless({1.0, 1.0, 1.0, 1.0});
        CHECK(m.beta == 1.0);
        CHECK(m.length_scale == 1.0);
    }
    SECTION("mass ratio definition") {
        const auto m = reduce_to_dimensionless({1.0, 2.0, 1.0, 1.0});
        CHECK(m.beta == 0.5);
        CHECK(m.length_scale == 1.0);
    }
    SECTION("length scale formula") {
        const auto m = reduce_to_dimensionless({2.0, 1.0, 4.0, 1.0});
        CHECK(m.beta == 2.0);
        CHECK_THAT(m.length_scale,
                   Catch::Matchers::WithinRel(std::pow(2.0, -0.5), 1e-15));
        CHECK_THAT(m.length_scale,
                   Catch::Matchers::WithinRel(std::pow(1.0 / 8.0, 1.0 / 6.0), 1e-15));
    }
    SECTION("beta is exact for representable mass ratios") {
        CHECK(reduce_to_dimensionless({3.0, 4.0, 2.0, 1.0}).beta == 3.0 / 4.0);
    }
    SECTION("invalid systems are rejected") {
        CHECK_THROWS_AS(OscillatorSystem(0.0, 1.0, 1.0, 1.0), std::domain_error);
        CHECK_THROWS_AS(OscillatorSystem(1.0, -2.0, 1.0, 1.0), std::domain_error);
        CHECK_THROWS_AS(OscillatorSystem(1.0, 1.0, 0.0, 1.0), std::domain_error);
        CHECK_THROWS_AS(OscillatorSystem(1.0, 1.0, 1.0, 0.0), std::domain_error);
    }
}

TEST_CASE("center-of-mass separation", "[oscillator]") {
    SECTION("equal masses") {
        const auto s = separate_cm({1.0, 1.0, 1.0, 1.0});
        CHECK(s.cm_mass == 2.0);
        CHECK(s.reduced_mass == 0.5);
    }
    SECTION("unequal masses") {
        const auto s = separate_cm({1.0, 3.0, 1.0, 1.0});
        CHECK(s.cm_mass == 4.0);
        CHECK(s.reduced_mass == 0.75);
    }
    SECTION("heavy partner limit") {
        const auto s = separate_cm({1.0, 1e6, 1.0, 1.0});
        CHECK(s.cm_mass == 1000001.0);
        CHECK_THAT(s.reduced_mass, Catch::Matchers::WithinRel(1.0, 2e-6));
        CHECK(s.reduced_mass < 1.0);
    }
    SECTION("reduced mass below both masses") {
        const auto s = separate_cm({2.5, 0.7, 1.0, 1.0});
        CHECK(s.reduced_mass < 0.7);
        CHECK(s.reduced_mass < 2.5);
    }
}

TEST_CASE("mass symmetry and reciprocity", "[oscillator]") {
    const std::array<std::pair<double, double>, 4> pairs{
        {{1.0, 2.0}, {0.3, 7.1}, {5.0, 5.0}, {1e-3, 42.0}}};
    for (const auto& [m1, m2] : pairs) {
        const OscillatorSystem fwd{m1, m2, 1.3, 1.0};
        const OscillatorSystem rev{m2, m1, 1.3, 1.0};
        CHECK(separate_cm(fwd).reduced_mass == separate_cm(rev).reduced_mass);
        const double bf = reduce_to_dimensionless(fwd).beta;
        const double br = reduce_to_dimensionless(rev).beta;
        CHECK_THAT(bf * br, Catch::Matchers::WithinRel(1.0, 1e-15));
    }
}

TEST_CASE("relative Hamiltonian coefficients", "[oscillator]") {
    const auto c1 = relative_hamiltonian_coefficients(1.0);
    CHECK(c1.kinetic_coeff == 1.0);
    CHECK(c1.quartic_coeff == 1.0);
    const auto ch = relative_hamiltonian_coefficients(0.5);
    CHECK(ch.kinetic_coeff == 0.75);
    CHECK(ch.quartic_coeff == 1.0);
    const auto c3 = relative_hamiltonian_coefficients(3.0);
    CHECK(c3.kinetic_coeff == 2.0);
    CHECK(c3.quartic_coeff == 1.0);
    CHECK_THROWS_AS(relative_hamiltonian_coefficients(0.0), std::domain_error);
    CHECK_THROWS_AS(relative_hamiltonian_coefficients(-1.0), std::domain_error);
    CHECK_THROWS_AS(cm_kinetic_coefficient(-0.2), std::domain_error);
}

TEST_CASE("energy scale is invariant under common mass rescaling", "[oscillator]") {
    // Scaling (m1, m2) -> (c m1, c m2) keeps beta, multiplies the dimensionless
    // energy unit by c^(-2/3) while the dimensionless spectrum is unchanged:
    // physical energies scale as expected for H = p^2/2m + k x^4.
    const OscillatorSystem base{1.0, 2.0, 3.0, 1.0};
    const double e_dimless = minimize_rel(reduce_to_dimensionless(base).beta).energy;
    const double e_phys_base = e_dimless * dimensionless_energy_unit(base);
    for (double c : {2.0, 4.0, 0.5}) {
        const OscillatorSystem scaled{c * 1.0, c * 2.0, 3.0, 1.0};
        const auto model = reduce_to_dimensionless(scaled);
        CHECK_THAT(model.beta, Catch::Matchers::WithinRel(0.5, 1e-15));
        const double e_phys =
            minimize_rel(model.beta).energy * dimensionless_energy_unit(scaled);
        CHECK_THAT(e_phys / e_phys_base,
                   Catch::Matchers::WithinRel(std::pow(c, -2.0 / 3.0), 1e-12));
    }
}

namespace {

// 4th-order central stencils; fxy composes the first-derivative stencil.
template <typename F>
double stencil_xx(F&& f, double x, double y, double h) {
    return (-f(x + 2 * h, y) + 16 * f(x + h, y) - 30 * f(x, y) +
            16 * f(x - h, y) - f(x - 2 * h, y)) /
           (12 * h * h);
}

template <typename F>
double stencil_yy(F&& f, double x, double y, double h) {
    return (-f(x, y + 2 * h) + 16 * f(x, y + h) - 30 * f(x, y) +
            16 * f(x, y - h) - f(x, y - 2 * h)) /
           (12 * h * h);
}

template <typename F>
double stencil_y(F&& f, double x, double y, double h) {
    return (f(x, y - 2 * h) - 8 * f(x, y - h) + 8 * f(x, y + h) -
            f(x, y + 2 * h)) /
           (12 * h);
}

template <typename F>
double stencil_xy(F&& f, double x, double y, double h) {
    auto fy = [&](double u, double v) { return stencil_y(f, u, v, h); };
    return (fy(x - 2 * h, y) - 8 * fy(x - h, y) + 8 * fy(x + h, y) -
            fy(x + 2 * h, y)) /
           (12 * h);
}

} // namespace

TEST_CASE("lab Hamiltonian equals CM plus relative operator", "[oscillator]") {
    // Apply H = -1/2 d11 - beta/2 d22 + (q1-q2)^4 two ways: directly, and as
    // T_cm + T_rel with T_cm = -(beta/(2(1+beta)))(d1+d2)^2 and
    // T_rel = -((beta+1)/2) (1/(1+beta))^2 (d1 - beta d2)^2. Both sides use the
    // same finite-difference derivative values, so any mismatch isolates an
    // inconsistency between the coefficient functions.
    using Fn = std::function<double(double, double)>;
    const std::vector<Fn> fns{
        [](double x, double y) { return std::exp(-0.7 * x * x - 0.4 * y * y); },
        [](double x, double y) {
            return (x + 0.5 * y) * std::exp(-0.5 * x * x - 0.6 * y * y);
        },
        [](double x, double y) {
            return (1.0 + x * y + y * y) * std::exp(-0.8 * x * x - 0.3 * y * y);
        }};
    const double h = 6e-3;
    for (double beta : {0.3, 1.0, 2.7}) {
        const double cc = cm_kinetic_coefficient(beta);
        const double kc = relative_hamiltonian_coefficients(beta).kinetic_coeff;
        const double jf = 1.0 / (1.0 + beta);
        double max_diff = 0.0, max_ref = 0.0;
        for (const auto& f : fns) {
            for (int i = 0; i < 5; ++i) {
                for (int j = 0; j < 5; ++j) {
                    const double x = -1.2 + 0.6 * i;
                    const double y = -1.2 + 0.6 * j;
                    const double fxx = stencil_xx(f, x, y, h);
                    const double fyy = stencil_yy(f, x, y, h);
                    const double fxy = stencil_xy(f, x, y, h);
                    const double pot = std::pow(x - y, 4) * f(x, y);
                    const double lab = -0.5 * fxx - 0.5 * beta * fyy + pot;
                    const double t_cm = -cc * (fxx + 2.0 * fxy + fyy);
                    const double t_rel = -kc * jf * jf *
                                         (fxx - 2.0 * beta * fxy +
                                          beta * beta * fyy);
                    const double split = t_cm + t_rel + pot;
                    max_diff = std::max(max_diff, std::abs(lab - split));
                    max_ref = std::max(max_ref, std::abs(lab));
                }
            }
        }
        INFO("beta = " << beta);
        CHECK(max_diff <= 1e-8 * std::max(1.0, max_ref));
    }
}

TEST_CASE("energy decomposition bookkeeping", "[oscillator]") {
    const auto d = EnergyDecomposition::of(0.25, 0.5, 0.75);
    CHECK(d.total == 1.5);
    CHECK(d.t_cm == 0.25);
    CHECK(d.t_rel == 0.5);
    CHECK(d.v == 0.75);
}
