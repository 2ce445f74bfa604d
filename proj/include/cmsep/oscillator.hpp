#pragma once

#include <cmath>
#include <stdexcept>

// Two particles on a line bound by a quartic interaction:
//
//   H = -hbar^2/(2 m1) d^2/dx1^2 - hbar^2/(2 m2) d^2/dx2^2 + k (x1 - x2)^4
//
// Measuring lengths in L = (hbar^2/(m1 k))^(1/6) and energies in
// hbar^2/(m1 L^2) turns this into a one-parameter family in beta = m1/m2:
//
//   H_lab = -1/2 d^2/dq1^2 - beta/2 d^2/dq2^2 + (q1 - q2)^4
//
// which splits exactly into a free CM part and a relative part,
//
//   T_cm  = -beta/(2(1+beta)) (d/dq1 + d/dq2)^2
//   H_rel = -(beta+1)/2 d^2/dq^2 + q^4,     q = q1 - q2.

namespace cmsep {

inline void require_positive(double value, const char* what) {
    if (!(value > 0.0))
        throw std::domain_error(std::string(what) + " must be positive");
}

struct OscillatorSystem {
    double m1;
    double m2;
    double k;
    double hbar = 1.0;

    OscillatorSystem(double m1_, double m2_, double k_, double hbar_ = 1.0)
        : m1(m1_), m2(m2_), k(k_), hbar(hbar_) {
        require_positive(m1, "m1");
        require_positive(m2, "m2");
        require_positive(k, "k");
        require_positive(hbar, "hbar");
    }

    double total_mass() const { return m1 + m2; }
    double reduced_mass() const { return m1 * m2 / (m1 + m2); }
    double mass_ratio() const { return m1 / m2; }
};

struct DimensionlessModel {
    double beta;         // m1/m2
    double length_scale; // L = (hbar^2/(m1 k))^(1/6)
};

struct CmSeparation {
    double cm_mass;      // m1 + m2
    double reduced_mass; // m1 m2 / (m1 + m2)
};

struct HamiltonianCoefficients {
    double kinetic_coeff; // multiplies -d^2/dq^2
    double quartic_coeff; // multiplies q^4
};

inline DimensionlessModel reduce_to_dimensionless(const OscillatorSystem& sys) {
    const double L = std::pow(sys.hbar * sys.hbar / (sys.m1 * sys.k), 1.0 / 6.0);
    return {sys.m1 / sys.m2, L};
}

// Energy unit of the dimensionless model: hbar^2/(m1 L^2).
inline double dimensionless_energy_unit(const OscillatorSystem& sys) {
    const double L = reduce_to_dimensionless(sys).length_scale;
    return sys.hbar * sys.hbar / (sys.m1 * L * L);
}

inline CmSeparation separate_cm(const OscillatorSystem& sys) {
    return {sys.total_mass(), sys.reduced_mass()};
}

inline void require_beta(double beta) {
    if (!(beta > 0.0))
        throw std::domain_error("beta must be positive");
}

inline HamiltonianCoefficients relative_hamiltonian_coefficients(double beta) {
    require_beta(beta);
    return {(beta + 1.0) / 2.0, 1.0};
}

// Coefficient of -(d/dq1 + d/dq2)^2 in the dimensionless CM kinetic operator.
inline double cm_kinetic_coefficient(double beta) {
    require_beta(beta);
    return beta / (2.0 * (1.0 + beta));
}

struct EnergyDecomposition {
    double t_cm = 0.0;
    double t_rel = 0.0;
    double v = 0.0;
    double total = 0.0;

    static EnergyDecomposition of(double t_cm, double t_rel, double v) {
        return {t_cm, t_rel, v, t_cm + t_rel + v};
    }
};

} // namespace cmsep
