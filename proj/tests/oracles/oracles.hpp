#pragma once

// Independent reference computations used only by the test suites. None of these
// share a code path with the production solver they check.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qrma/dynamics.hpp"

namespace qrma::oracle {

/// Ascending eigenvalues of a dense symmetric matrix (Eigen's self-adjoint solver).
std::vector<double> dense_eigenvalues(const Eigen::MatrixXd& h);

/// S|0> from the closed form (1/sqrt(cosh r)) sum_m (-tanh r)^m sqrt((2m)!)/(2^m m!) |2m>,
/// r = ln(Omega)/2.
Eigen::VectorXd squeezed_vacuum(double omega, std::size_t n_max);

/// S^+|eps> = D(eps sqrt(Omega)) S^+|0> from the three-term recurrence implied by
/// [(a - alpha) cosh r - (a^+ - alpha) sinh r] |psi> = 0, normalized numerically.
Eigen::VectorXd squeezed_coherent_recurrence(double epsilon, double omega, std::size_t n_max);

/// Amplitudes A_np obtained by solving the block linear system that maps the
/// expansion coefficients onto the spinor components of the initial state,
/// without assuming the eigenvector matrices are orthogonal. Returns (A_+, A_-).
std::pair<Eigen::VectorXd, Eigen::VectorXd> projection_by_linear_solve(const Projection& proj);

/// Textbook O(N^2) DFT.
std::vector<std::complex<double>> naive_dft(const std::vector<double>& x);

/// <psi'| S^T (a^+ a) S |psi'> for the spinor built from single-component coefficients c
/// in sector p, using a dense squeeze matrix of size `basis`.
double dense_photon_number(const Eigen::VectorXd& c, Parity parity, double omega, std::size_t basis);

/// Random unit vector with `support` leading nonzero entries out of n.
Eigen::VectorXd random_unit_vector(std::size_t n, std::size_t support, unsigned seed);

}  // namespace qrma::oracle
