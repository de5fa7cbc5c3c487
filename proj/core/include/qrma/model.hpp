#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qrma {

/// Physical inputs of the Rabi model with the diamagnetic (A^2) term.
///
/// All energies are measured in units of the cavity frequency.
struct ModelParams {
    double big_delta = 1.0;  ///< atomic transition frequency
    double osc_delta = 1.0;  ///< relative oscillator strength; 0 selects the plain Rabi model
    double coupling = 0.0;   ///< dimensionless dipole coupling f
};

/// Quantities that follow from ModelParams once the sum rule fixes the A^2 strength.
struct DerivedParams {
    double k = 0.0;        ///< strength of the k (a + a^+)^2 term
    double omega = 1.0;    ///< renormalized field frequency, sqrt(1 + 4k)
    double f_tilde = 0.0;  ///< renormalized coupling, f / sqrt(omega)
    double shift = 0.0;    ///< constant offset (omega - 1) / 2
};

/// Eigenvalue of the combined parity sigma_3 exp(i pi a^+ a).
class Parity {
public:
    static constexpr Parity even() { return Parity(1); }
    static constexpr Parity odd() { return Parity(-1); }

    /// Throws InvalidParameter unless value is +1 or -1.
    static Parity from_int(int value);

    constexpr int value() const { return value_; }
    constexpr Parity flipped() const { return Parity(-value_); }
    constexpr bool operator==(const Parity&) const = default;

private:
    constexpr explicit Parity(int v) : value_(v) {}
    int value_;
};

/// Throws InvalidParameter when p violates the domain (big_delta > 0, coupling >= 0,
/// osc_delta == 0 or osc_delta >= 1, all finite).
void validate(const ModelParams& p);

DerivedParams derive_params(const ModelParams& p);

/// Real symmetric tridiagonal matrix stored as its diagonal and first off-diagonal.
struct TridiagonalBlock {
    std::vector<double> diag;
    std::vector<double> offdiag;  ///< size diag.size() - 1

    std::size_t size() const { return diag.size(); }
};

// Dense builders use the product basis index  spin * n_max + n  with spin 0 = up
// (sigma_3 = +1) and spin 1 = down, n the Fock index.

/// H = (D/2) s3 + f (a + a^+) s1 + a^+ a + k (a + a^+)^2, with the last term expanded
/// as k (a^2 + a^+2 + 2 a^+ a + 1) so the truncated matrix is the exact projection.
Eigen::MatrixXd build_qrma_dense(const ModelParams& p, std::size_t n_max);

/// H' = (D/2) s3 + f~ (a + a^+) s1 + Omega a^+ a + (Omega - 1)/2, the squeezed frame.
Eigen::MatrixXd build_transformed_dense(const ModelParams& p, std::size_t n_max);

/// H'' = (D/2) s1 - f~ (a + a^+) s3 + Omega a^+ a + (Omega - 1)/2, i.e. H' after the
/// spin rotation R = (1 + i s2)/sqrt(2).
Eigen::MatrixXd build_rotated_dense(const ModelParams& p, std::size_t n_max);

/// One combined-parity sector of H'' reduced to a single field component:
///   diag[n]    = Omega n + (Omega - 1)/2 + (D/2) p (-1)^n
///   offdiag[n] = -f~ sqrt(n + 1)
TridiagonalBlock build_parity_block(const ModelParams& p, Parity parity, std::size_t n_max);

}  // namespace qrma
