#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qrma {

/// Amplitudes of a single-mode field state over the truncated Fock basis 0..n_max-1.
struct FockVector {
    std::vector<std::complex<double>> amps;

    std::size_t n_max() const { return amps.size(); }
    double norm_squared() const;
    /// Sum of |amps[k]|^2 over k >= first.
    double mass_from(std::size_t first) const;
    /// Weight in the last `edge` Fock states; used to decide whether the truncation is adequate.
    double tail_mass(std::size_t edge = 8) const;
    /// sum_k k |amps[k]|^2
    double mean_photon_number() const;
};

/// Convergence threshold on FockVector::tail_mass.
inline constexpr double kTailTolerance = 1e-10;

/// Number of top Fock states whose amplitudes are contaminated by the truncation edge
/// of the squeeze generator and must not be trusted.
inline constexpr std::size_t kSqueezeEdgeGuard = 16;

struct SqueezeSpec {
    double omega = 1.0;
    std::size_t n_max = 64;
};

/// Truncated ladder operator: a(n-1, n) = sqrt(n).
Eigen::MatrixXd annihilation_matrix(std::size_t n_max);

/// exp(A) for a real square matrix by scaling and squaring a Taylor series.
/// The series is summed until the next term drops below 1e-14 relative to the partial sum.
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& a);

/// S = exp(((a^2 - a^+2)/4) ln Omega) on the truncated space. Real and, away from
/// the last kSqueezeEdgeGuard rows/columns, orthogonal.
Eigen::MatrixXd squeeze_matrix(const SqueezeSpec& spec);

/// Coherent state amplitudes exp(-eps^2/2) eps^k / sqrt(k!) via the recurrence
/// amps[k] = amps[k-1] * eps / sqrt(k). Throws TruncationError when tail_mass()
/// exceeds kTailTolerance.
FockVector coherent_amplitudes(double epsilon, std::size_t n_max);

/// <k| S^+ |eps> for k in the truncated basis, i.e. squeeze_matrix(spec)^T applied to the
/// coherent vector. Components from the guarded edge are computed but the tail test
/// is applied to the trusted region, and TruncationError is thrown when it fails.
FockVector squeezed_coherent_overlaps(double epsilon, const SqueezeSpec& spec);

}  // namespace qrma
