#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "cmsep/errors.hpp"
#include "cmsep/oscillator.hpp"
#include "cmsep/variational.hpp"

// Near-exact ground state of H_rel = -c d^2/dq^2 + q^4, c = (beta+1)/2.
//
// Primary method: diagonalization in a harmonic-oscillator basis of
// frequency omega, q = sqrt(c/omega)(A + A+), for which
//
//   c p^2 -> (omega/4) (2N + 1 - A^2 - A+^2)
//   q^4   -> (c/omega)^2 * ladder polynomial, couplings up to |dn| = 4
//
// The potential is even, so the ground state sits in the even-parity block;
// omega is tied to the optimal Gaussian width (omega = 4 c a_opt), which
// makes the 1x1 block reproduce the variational energy exactly and happens
// to zero out the <0|H|2> coupling. Basis sizes double until the energy is
// Cauchy within tol.
//
// Cross-check method (no shared machinery, not even the eigensolver):
// second-order finite differences on a uniform Dirichlet grid, smallest
// eigenvalue via Sturm-sequence bisection, two Richardson levels in h^2.

namespace cmsep {

struct ExactGroundState {
    double beta = 0.0;
    double energy = 0.0;
    int basis_size = 0;          // even-block functions at acceptance
    double residual = 0.0;       // |E(N) - E(N/2)| at acceptance
    double basis_frequency = 0.0;
};

enum class Parity { Even, Odd };

inline double basis_frequency(double beta) {
    require_beta(beta);
    return 4.0 * 0.5 * (beta + 1.0) * optimal_relative_width(beta);
}

inline Eigen::MatrixXd oscillator_basis_matrix(double beta, double omega,
                                               int dim, Parity parity) {
    require_beta(beta);
    require_positive(omega, "basis frequency");
    if (dim < 1) throw std::domain_error("basis size must be >= 1");
    const double c = 0.5 * (beta + 1.0);
    const double g2 = (c / omega) * (c / omega);
    const int off = parity == Parity::Even ? 0 : 1;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) {
        const double n = 2 * j + off;
        h(j, j) = 0.25 * omega * (2.0 * n + 1.0) +
                  3.0 * g2 * (2.0 * n * n + 2.0 * n + 1.0);
        if (j + 1 < dim) {
            const double s = std::sqrt((n + 1.0) * (n + 2.0));
            h(j, j + 1) = h(j + 1, j) = s * (g2 * (4.0 * n + 6.0) - 0.25 * omega);
        }
        if (j + 2 < dim) {
            const double s = std::sqrt((n + 1.0) * (n + 2.0) * (n + 3.0) * (n + 4.0));
            h(j, j + 2) = h(j + 2, j) = g2 * s;
        }
    }
    return h;
}

inline double basis_ground_energy(double beta, int dim,
                                  Parity parity = Parity::Even) {
    const Eigen::MatrixXd h =
        oscillator_basis_matrix(beta, basis_frequency(beta), dim, parity);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

inline ExactGroundState ground_state_energy(double beta, double tol = 1e-9,
                                            int max_basis = 512) {
    require_beta(beta);
    if (!(tol >= 1e-12))
        throw std::domain_error("tol must be >= 1e-12");
    const double omega = basis_frequency(beta);
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int dim = 16; dim <= max_basis; dim *= 2) {
        const double e = basis_ground_energy(beta, dim);
        if (dim > 16) {
            const double residual = std::abs(e - prev);
            if (residual <= tol) return {beta, e, dim, residual, omega};
        }
        prev = e;
    }
    throw convergence_error(
        "basis doubling exhausted without reaching tolerance", {beta}, prev,
        max_basis);
}

inline std::vector<std::pair<int, double>>
convergence_study(double beta, const std::vector<int>& sizes) {
    require_beta(beta);
    if (sizes.empty())
        throw std::domain_error("sizes must not be empty");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 2)
            throw std::domain_error("basis sizes must be >= 2");
        if (i > 0 && sizes[i] <= sizes[i - 1])
            throw std::domain_error("basis sizes must be strictly increasing");
    }
    std::vector<std::pair<int, double>> out;
    out.reserve(sizes.size());
    for (int s : sizes) out.emplace_back(s, basis_ground_energy(beta, s));
    return out;
}

namespace detail {

// Eigenvalues below x of a symmetric tridiagonal matrix (Sturm sequence).
inline int sturm_count_below(const std::vector<double>& diag,
                             const std::vector<double>& off, double x) {
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        double denom = q;
        if (denom == 0.0) denom = 1e-300;
        q = diag[i] - x - off[i - 1] * off[i - 1] / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

inline double tridiagonal_smallest_eigenvalue(const std::vector<double>& diag,
                                              const std::vector<double>& off) {
    // Gershgorin lower bound; the smallest diagonal entry is a Rayleigh
    // quotient, hence an upper bound on the smallest eigenvalue.
    double lo = std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(off[i - 1]);
        if (i + 1 < diag.size()) r += std::abs(off[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::min(hi, diag[i]);
    }
    while (hi - lo > 1e-13 * std::max(1.0, std::abs(lo) + std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count_below(diag, off, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace detail

inline double grid_ground_energy(double beta, int n = 2047,
                                 double radius = 6.5) {
    require_beta(beta);
    if (n < 3) throw std::domain_error("grid size must be >= 3");
    require_positive(radius, "grid radius");
    const double c = 0.5 * (beta + 1.0);
    auto level = [&](int m) {
        const double h = 2.0 * radius / (m + 1);
        std::vector<double> d(m);
        std::vector<double> e(m - 1, -c / (h * h));
        for (int i = 0; i < m; ++i) {
            const double q = -radius + h * (i + 1);
            d[i] = 2.0 * c / (h * h) + q * q * q * q;
        }
        return detail::tridiagonal_smallest_eigenvalue(d, e);
    };
    // Grid counts n, 2n+1, 4n+3 halve h exactly; two Richardson levels in h^2.
    const double e1 = level(n);
    const double e2 = level(2 * n + 1);
    const double e3 = level(4 * n + 3);
    const double r1 = (4.0 * e2 - e1) / 3.0;
    const double r2 = (4.0 * e3 - e2) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

} // namespace cmsep
