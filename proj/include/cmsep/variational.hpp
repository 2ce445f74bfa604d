#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "cmsep/minimize.hpp"
#include "cmsep/oscillator.hpp"

// Gaussian variational treatment of the dimensionless two-particle model.
//
// Relative-coordinate trial  phi_r(q)      = exp(-a q^2)
// Lab-frame product trial    phi_nr(q1,q2) = exp(-a q1^2 - b q2^2)
//
// Gaussian moments <q^2> = 1/(4a), <q^4> = 3/(16 a^2) give
//
//   W_rel(a)   = (beta+1) a / 2 + 3/(16 a^2)
//   W_lab(a,b) = a/2 + beta b/2 + 3 (1/(4a) + 1/(4b))^2
//
// both of which are cross-checked against direct quadrature in the tests
// before anything downstream trusts them. The lab-frame trial is a product
// over particle coordinates, so it cannot factor the CM motion out; the gap
// W_lab - W_rel is exactly the spurious CM contamination under study.

namespace cmsep {

enum class TrialKind { RelativeGaussian, LabGaussian };

struct TrialFunction {
    TrialKind kind = TrialKind::RelativeGaussian;
    double a = 1.0;
    double b = 1.0; // LabGaussian only

    static TrialFunction relative(double a) {
        require_positive(a, "width a");
        return {TrialKind::RelativeGaussian, a, 1.0};
    }
    static TrialFunction lab(double a, double b) {
        require_positive(a, "width a");
        require_positive(b, "width b");
        return {TrialKind::LabGaussian, a, b};
    }
};

struct VariationalResult {
    TrialFunction trial;
    double energy = 0.0;
    EnergyDecomposition decomposition;
    double virial_residual = 0.0; // total-kinetic residual, quartic degree
    long iterations = 0;          // 0 for closed-form paths
};

struct VirialReport {
    double total_residual;         // (2(t_cm + t_rel) - n v) / max(1, |E|)
    double relative_only_residual; // (2 t_rel - n v) / max(1, |E|)
};

inline void require_beta_evaluable(double beta) {
    // Energy evaluators admit the beta -> 0 limit (infinitely heavy partner);
    // optimizers require beta > 0 strictly.
    if (!(beta >= 0.0))
        throw std::domain_error("beta must be nonnegative");
}

inline double relative_energy(double a, double beta) {
    require_positive(a, "width a");
    require_beta_evaluable(beta);
    return 0.5 * (beta + 1.0) * a + 3.0 / (16.0 * a * a);
}

inline EnergyDecomposition relative_decomposition(double a, double beta) {
    require_positive(a, "width a");
    require_beta_evaluable(beta);
    return EnergyDecomposition::of(0.0, 0.5 * (beta + 1.0) * a,
                                   3.0 / (16.0 * a * a));
}

inline double lab_energy(double a, double b, double beta) {
    require_positive(a, "width a");
    require_positive(b, "width b");
    require_beta_evaluable(beta);
    const double s = 1.0 / (4.0 * a) + 1.0 / (4.0 * b);
    return 0.5 * a + 0.5 * beta * b + 3.0 * s * s;
}

// Split of the lab-frame expectation: T_cm picks up the (d1 + d2)^2 part,
// T_rel the complementary -(d1 - beta d2)^2/(2(1+beta)); together they add
// back to the plain kinetic term a/2 + beta b/2.
inline EnergyDecomposition lab_decomposition(double a, double b, double beta) {
    require_positive(a, "width a");
    require_positive(b, "width b");
    require_beta_evaluable(beta);
    const double s = 1.0 / (4.0 * a) + 1.0 / (4.0 * b);
    const double t_cm = beta * (a + b) / (2.0 * (1.0 + beta));
    const double t_rel = (a + beta * beta * b) / (2.0 * (1.0 + beta));
    return EnergyDecomposition::of(t_cm, t_rel, 3.0 * s * s);
}

inline double optimal_relative_width(double beta) {
    require_beta(beta);
    return std::cbrt(3.0 / (4.0 * (beta + 1.0)));
}

inline std::pair<double, double> optimal_lab_widths(double beta) {
    require_beta(beta);
    const double r = std::sqrt(beta);
    const double a = std::cbrt(3.0 * (1.0 + r) / 4.0);
    return {a, a / r};
}

inline VirialReport virial_report(const EnergyDecomposition& d,
                                  int potential_degree) {
    if (potential_degree == 0)
        throw std::domain_error("potential degree must be nonzero");
    const double n = potential_degree;
    const double scale = std::max(1.0, std::abs(d.total));
    return {(2.0 * (d.t_cm + d.t_rel) - n * d.v) / scale,
            (2.0 * d.t_rel - n * d.v) / scale};
}

inline VirialReport virial_report(const VariationalResult& r,
                                  int potential_degree) {
    return virial_report(r.decomposition, potential_degree);
}

inline VariationalResult minimize_rel(double beta) {
    require_beta(beta);
    const double a = optimal_relative_width(beta);
    const double energy =
        3.0 * std::cbrt(6.0) * std::pow(beta + 1.0, 2.0 / 3.0) / 8.0;
    const auto d = relative_decomposition(a, beta);
    return {TrialFunction::relative(a), energy, d,
            virial_report(d, 4).total_residual, 0};
}

inline VariationalResult minimize_lab(double beta) {
    require_beta(beta);
    const auto [a, b] = optimal_lab_widths(beta);
    const double energy =
        3.0 * std::cbrt(6.0) * std::pow(std::sqrt(beta) + 1.0, 4.0 / 3.0) / 8.0;
    const auto d = lab_decomposition(a, b, beta);
    return {TrialFunction::lab(a, b), energy, d,
            virial_report(d, 4).total_residual, 0};
}

// Numeric counterparts: same optima found by derivative-free descent, used
// to cross-validate the closed forms (and by the CLI's agreement gap).

inline VariationalResult minimize_rel_numeric(double beta, double start_a = 1.0,
                                              MinimizeOptions opt = {}) {
    require_beta(beta);
    auto objective = [beta](const std::vector<double>& x) {
        return relative_energy(x[0], beta);
    };
    const auto m = minimize_coordinate_descent(objective, {start_a}, opt);
    const auto d = relative_decomposition(m.params[0], beta);
    return {TrialFunction::relative(m.params[0]), m.value, d,
            virial_report(d, 4).total_residual, m.sweeps};
}

inline VariationalResult minimize_lab_numeric(double beta, double start_a = 1.0,
                                              double start_b = 1.0,
                                              MinimizeOptions opt = {}) {
    require_beta(beta);
    auto objective = [beta](const std::vector<double>& x) {
        return lab_energy(x[0], x[1], beta);
    };
    const auto m = minimize_coordinate_descent(objective, {start_a, start_b}, opt);
    const auto d = lab_decomposition(m.params[0], m.params[1], beta);
    return {TrialFunction::lab(m.params[0], m.params[1]), m.value, d,
            virial_report(d, 4).total_residual, m.sweeps};
}

} // namespace cmsep
