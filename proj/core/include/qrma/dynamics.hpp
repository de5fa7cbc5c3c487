#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qrma/model.hpp"
#include "qrma/spectrum.hpp"
#include "qrma/squeeze.hpp"

namespace qrma {

/// Atom in chi_down, field in the coherent state |eps>.
struct InitialCondition {
    double epsilon = 0.0;
};

/// Uniform samples t_i = i * t_max / (samples - 1), i = 0..samples-1.
struct TimeGrid {
    double t_max = 100.0;
    std::size_t samples = 4096;

    /// Throws InvalidParameter unless t_max > 0 and samples >= 2.
    void validate() const;
    double dt() const { return t_max / static_cast<double>(samples - 1); }
    double time(std::size_t i) const { return dt() * static_cast<double>(i); }
    std::vector<double> times() const;
};

/// Inversion w(t) = P_down - P_up, so the chi_down initial state starts at w(0) = +1.
struct TimeSeries {
    TimeGrid grid;
    std::vector<double> w;
};

struct FrequencySpectrum {
    std::vector<double> freqs;  ///< angular frequencies 2 pi k / (samples dt)
    std::vector<double> mags;   ///< |DFT| of the mean-removed, optionally windowed series
};

enum class Window { none, hann };

/// Expansion of the initial state over the eigenstates of both parity sectors,
/// carried out in the squeezed frame.
struct Projection {
    ModelParams params;
    DerivedParams derived;
    EigenSolution even;  ///< p = +1, all levels of the block
    EigenSolution odd;   ///< p = -1
    Eigen::VectorXd amp_even;
    Eigen::VectorXd amp_odd;
    FockVector overlaps;  ///< <l| S^+ |eps>
    double completeness = 0.0;  ///< sum |A_np|^2

    const EigenSolution& sector(Parity p) const { return p == Parity::even() ? even : odd; }
    const Eigen::VectorXd& amplitudes(Parity p) const { return p == Parity::even() ? amp_even : amp_odd; }
};

/// Spin-resolved field amplitudes in the squeezed frame, index = Fock state S|l>.
struct SpinorState {
    Eigen::VectorXcd up;
    Eigen::VectorXcd down;
};

/// Smallest power-of-two basis (>= 64) whose squeezed coherent overlaps leave less than
/// 1e-14 of the norm in the upper half of the basis. Throws TruncationError past 4096.
std::size_t dynamics_basis_size(const ModelParams& p, const InitialCondition& ic);

/// A_np = <psi_n^p | chi_down (x) S^+|eps>, i.e. minus the sum of C^{np}_l <l|S^+|eps>
/// over the Fock indices with (-1)^l = -p. Both solutions must cover the full block
/// of the same size as `overlaps`. Throws TruncationError when sum |A|^2 < 1 - 1e-6.
Projection project_initial(const ModelParams& p, const FockVector& overlaps,
                           EigenSolution even, EigenSolution odd);

/// Diagonalizes both sectors at n_max (0 = dynamics_basis_size) and projects.
Projection project_initial(const ModelParams& p, const InitialCondition& ic, std::size_t n_max = 0);

/// sum_np A_np exp(-i E t) |psi_n^p> in the squeezed frame.
SpinorState state_at(const Projection& proj, double t);

/// Reduced atomic density matrix in the (up, down) basis. The partial trace over the
/// field is invariant under the squeeze, so the squeezed-frame state may be used directly.
Eigen::Matrix2cd atomic_density_matrix(const SpinorState& state);

/// rho_down,down - rho_up,up.
double inversion(const Eigen::Matrix2cd& rho);

/// Exact inversion on the grid by phase evolution in the eigenbasis.
TimeSeries evolve_inversion(const Projection& proj, const TimeGrid& grid);

/// Independent check: diagonalizes the untransformed Hamiltonian densely at n_max and
/// evolves chi_down (x) |eps> in the lab frame.
TimeSeries direct_evolution_oracle(const ModelParams& p, const InitialCondition& ic,
                                   const TimeGrid& grid, std::size_t n_max = 256);

/// Renormalized-RWA inversion sampled on the grid.
TimeSeries rwa_time_series(const ModelParams& p, const InitialCondition& ic, const TimeGrid& grid);

/// DFT magnitude of the mean-removed series. Requires at least 4 samples.
FrequencySpectrum fourier_spectrum(const TimeSeries& ts, Window window = Window::none);

/// dt/N * sum over all N DFT bins of |X_k|^2, reconstructed from the one-sided magnitudes.
/// Equals dt * sum (w - mean)^2 for an unwindowed spectrum.
double spectral_power(const FrequencySpectrum& spectrum, const TimeGrid& grid);

/// Local maxima (excluding the zero-frequency bin) whose magnitude exceeds
/// rel_threshold times the largest magnitude.
std::vector<std::size_t> spectral_peaks(const FrequencySpectrum& spectrum, double rel_threshold);

}  // namespace qrma
