#include "qrma/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <string>

#include <fftw3.h>

#include "qrma/errors.hpp"
#include "qrma/rwa.hpp"

namespace qrma {

namespace {

constexpr double kCompletenessDeficit = 1e-6;
constexpr std::size_t kTimeChunk = 512;

void check_epsilon(double epsilon) {
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
        throw InvalidParameter("coherent amplitude epsilon must be non-negative");
    }
}

// Fock index l carries spin up in sector p exactly when (-1)^l == p.
bool is_up(Eigen::Index l, Parity p) { return ((l % 2 == 0) ? 1 : -1) == p.value(); }

// Evolves sum_n A_n e^{-i E_n t} v_n for a chunk of times: returns columns = times.
Eigen::MatrixXcd evolve_chunk(const Eigen::MatrixXd& weighted_vectors, const std::vector<double>& energies,
                              const std::vector<double>& times, std::size_t first, std::size_t count) {
    const auto levels = static_cast<Eigen::Index>(energies.size());
    Eigen::MatrixXd cos_phase(levels, static_cast<Eigen::Index>(count));
    Eigen::MatrixXd sin_phase(levels, static_cast<Eigen::Index>(count));
    for (std::size_t j = 0; j < count; ++j) {
        const double t = times[first + j];
        for (Eigen::Index n = 0; n < levels; ++n) {
            const double phase = energies[static_cast<std::size_t>(n)] * t;
            cos_phase(n, static_cast<Eigen::Index>(j)) = std::cos(phase);
            sin_phase(n, static_cast<Eigen::Index>(j)) = -std::sin(phase);
        }
    }
    Eigen::MatrixXcd out(weighted_vectors.rows(), static_cast<Eigen::Index>(count));
    out.real() = weighted_vectors * cos_phase;
    out.imag() = weighted_vectors * sin_phase;
    return out;
}

struct FftwDeleter {
    void operator()(void* p) const { fftw_free(p); }
};

}  // namespace

void TimeGrid::validate() const {
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InvalidParameter("t_max must be positive");
    if (samples < 2) throw InvalidParameter("time grid needs at least 2 samples");
}

std::vector<double> TimeGrid::times() const {
    std::vector<double> ts(samples);
    for (std::size_t i = 0; i < samples; ++i) ts[i] = time(i);
    return ts;
}

std::size_t dynamics_basis_size(const ModelParams& p, const InitialCondition& ic) {
    check_epsilon(ic.epsilon);
    const DerivedParams d = derive_params(p);
    for (std::size_t n = 64; n <= 4096; n *= 2) {
        try {
            const FockVector g = squeezed_coherent_overlaps(ic.epsilon, SqueezeSpec{d.omega, n});
            if (g.mass_from(n / 2) < 1e-14) return n;
        } catch (const TruncationError&) {
            // too small; keep doubling
        }
    }
    throw TruncationError("initial state with epsilon=" + std::to_string(ic.epsilon) +
                          " needs more than 4096 Fock states");
}

Projection project_initial(const ModelParams& p, const FockVector& overlaps, EigenSolution even,
                           EigenSolution odd) {
    const auto n = static_cast<Eigen::Index>(overlaps.n_max());
    if (even.n_max != overlaps.n_max() || odd.n_max != overlaps.n_max() ||
        even.vectors.cols() != n || odd.vectors.cols() != n) {
        throw InvalidParameter("projection needs complete parity solutions matching the overlap basis");
    }
    if (even.parity != Parity::even() || odd.parity != Parity::odd()) {
        throw InvalidParameter("projection: solutions passed in the wrong parity slots");
    }
    Projection proj;
    proj.params = p;
    proj.derived = derive_params(p);
    proj.overlaps = overlaps;

    Eigen::VectorXd g(n);
    for (Eigen::Index l = 0; l < n; ++l) g(l) = overlaps.amps[static_cast<std::size_t>(l)].real();

    for (Parity parity : {Parity::even(), Parity::odd()}) {
        const EigenSolution& sol = parity == Parity::even() ? even : odd;
        // Lower spinor component of |psi_n^p> is -C_l on the Fock indices with (-1)^l = -p.
        Eigen::VectorXd masked = Eigen::VectorXd::Zero(n);
        for (Eigen::Index l = 0; l < n; ++l) {
            if (!is_up(l, parity)) masked(l) = -g(l);
        }
        Eigen::VectorXd amps = sol.vectors.transpose() * masked;
        (parity == Parity::even() ? proj.amp_even : proj.amp_odd) = std::move(amps);
    }
    proj.completeness = proj.amp_even.squaredNorm() + proj.amp_odd.squaredNorm();
    proj.even = std::move(even);
    proj.odd = std::move(odd);
    if (proj.completeness < 1.0 - kCompletenessDeficit) {
        throw TruncationError("initial state projection captures only " +
                              std::to_string(proj.completeness) + " of the norm");
    }
    return proj;
}

Projection project_initial(const ModelParams& p, const InitialCondition& ic, std::size_t n_max) {
    check_epsilon(ic.epsilon);
    if (n_max == 0) n_max = dynamics_basis_size(p, ic);
    const DerivedParams d = derive_params(p);
    const FockVector g = squeezed_coherent_overlaps(ic.epsilon, SqueezeSpec{d.omega, n_max});
    EigenSolution even = solve_block(build_parity_block(p, Parity::even(), n_max), 0, Parity::even());
    EigenSolution odd = solve_block(build_parity_block(p, Parity::odd(), n_max), 0, Parity::odd());
    return project_initial(p, g, std::move(even), std::move(odd));
}

SpinorState state_at(const Projection& proj, double t) {
    const auto n = static_cast<Eigen::Index>(proj.overlaps.n_max());
    SpinorState state;
    state.up = Eigen::VectorXcd::Zero(n);
    state.down = Eigen::VectorXcd::Zero(n);
    for (Parity parity : {Parity::even(), Parity::odd()}) {
        const EigenSolution& sol = proj.sector(parity);
        const Eigen::VectorXd& amps = proj.amplitudes(parity);
        Eigen::VectorXcd u = Eigen::VectorXcd::Zero(n);
        for (Eigen::Index j = 0; j < sol.vectors.cols(); ++j) {
            const std::complex<double> phase =
                std::polar(amps(j), -sol.energies[static_cast<std::size_t>(j)] * t);
            u += phase * sol.vectors.col(j);
        }
        for (Eigen::Index l = 0; l < n; ++l) {
            if (is_up(l, parity)) {
                state.up(l) = u(l);
            } else {
                state.down(l) = -u(l);
            }
        }
    }
    return state;
}

Eigen::Matrix2cd atomic_density_matrix(const SpinorState& state) {
    Eigen::Matrix2cd rho;
    rho(0, 0) = state.up.squaredNorm();
    rho(1, 1) = state.down.squaredNorm();
    rho(0, 1) = (state.up.array() * state.down.conjugate().array()).sum();
    rho(1, 0) = std::conj(rho(0, 1));
    return rho;
}

double inversion(const Eigen::Matrix2cd& rho) { return rho(1, 1).real() - rho(0, 0).real(); }

TimeSeries evolve_inversion(const Projection& proj, const TimeGrid& grid) {
    grid.validate();
    const std::vector<double> times = grid.times();
    TimeSeries ts{grid, std::vector<double>(grid.samples, 0.0)};
    for (Parity parity : {Parity::even(), Parity::odd()}) {
        const EigenSolution& sol = proj.sector(parity);
        const Eigen::MatrixXd weighted = sol.vectors * proj.amplitudes(parity).asDiagonal();
        // Per Fock index: +1 when that component is the lower spinor entry.
        Eigen::RowVectorXd sign(weighted.rows());
        for (Eigen::Index l = 0; l < weighted.rows(); ++l) sign(l) = is_up(l, parity) ? -1.0 : 1.0;
        for (std::size_t first = 0; first < times.size(); first += kTimeChunk) {
            const std::size_t count = std::min(kTimeChunk, times.size() - first);
            const Eigen::MatrixXcd u = evolve_chunk(weighted, sol.energies, times, first, count);
            const Eigen::RowVectorXd contrib = sign * u.cwiseAbs2();
            for (std::size_t j = 0; j < count; ++j) ts.w[first + j] += contrib(static_cast<Eigen::Index>(j));
        }
    }
    return ts;
}

TimeSeries direct_evolution_oracle(const ModelParams& p, const InitialCondition& ic,
                                   const TimeGrid& grid, std::size_t n_max) {
    grid.validate();
    check_epsilon(ic.epsilon);
    const Eigen::MatrixXd h = build_qrma_dense(p, n_max);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    if (eig.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed");

    const auto n = static_cast<Eigen::Index>(n_max);
    const FockVector coherent = coherent_amplitudes(ic.epsilon, n_max);
    Eigen::VectorXd psi0 = Eigen::VectorXd::Zero(2 * n);
    for (Eigen::Index l = 0; l < n; ++l) psi0(n + l) = coherent.amps[static_cast<std::size_t>(l)].real();

    const Eigen::VectorXd coeffs = eig.eigenvectors().transpose() * psi0;
    const Eigen::MatrixXd weighted = eig.eigenvectors() * coeffs.asDiagonal();
    const std::vector<double> energies(eig.eigenvalues().data(), eig.eigenvalues().data() + 2 * n);
    Eigen::RowVectorXd sign(2 * n);
    sign.head(n).setConstant(-1.0);
    sign.tail(n).setConstant(1.0);

    const std::vector<double> times = grid.times();
    TimeSeries ts{grid, std::vector<double>(grid.samples, 0.0)};
    for (std::size_t first = 0; first < times.size(); first += kTimeChunk) {
        const std::size_t count = std::min(kTimeChunk, times.size() - first);
        const Eigen::MatrixXcd psi = evolve_chunk(weighted, energies, times, first, count);
        const Eigen::RowVectorXd w = sign * psi.cwiseAbs2();
        for (std::size_t j = 0; j < count; ++j) ts.w[first + j] = w(static_cast<Eigen::Index>(j));
    }
    return ts;
}

TimeSeries rwa_time_series(const ModelParams& p, const InitialCondition& ic, const TimeGrid& grid) {
    grid.validate();
    return TimeSeries{grid, rwa_inversion_series(p, ic.epsilon, grid.times())};
}

FrequencySpectrum fourier_spectrum(const TimeSeries& ts, Window window) {
    ts.grid.validate();
    const std::size_t n = ts.w.size();
    if (n < 4) throw InvalidParameter("Fourier spectrum needs at least 4 samples");
    if (n != ts.grid.samples) throw InvalidParameter("time series length does not match its grid");

    double mean = 0.0;
    for (double x : ts.w) mean += x;
    mean /= static_cast<double>(n);

    const std::size_t bins = n / 2 + 1;
    std::unique_ptr<double, FftwDeleter> in(static_cast<double*>(fftw_malloc(sizeof(double) * n)));
    std::unique_ptr<fftw_complex, FftwDeleter> out(
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * bins)));
    for (std::size_t i = 0; i < n; ++i) {
        double x = ts.w[i] - mean;
        if (window == Window::hann) {
            x *= 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                       static_cast<double>(n - 1)));
        }
        in.get()[i] = x;
    }
    fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);

    FrequencySpectrum spec;
    spec.freqs.resize(bins);
    spec.mags.resize(bins);
    const double period = static_cast<double>(n) * ts.grid.dt();
    for (std::size_t k = 0; k < bins; ++k) {
        spec.freqs[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / period;
        spec.mags[k] = std::hypot(out.get()[k][0], out.get()[k][1]);
    }
    return spec;
}

double spectral_power(const FrequencySpectrum& spectrum, const TimeGrid& grid) {
    const std::size_t n = grid.samples;
    if (spectrum.mags.size() != n / 2 + 1) throw InvalidParameter("spectrum does not match grid");
    double sum = 0.0;
    for (std::size_t k = 0; k < spectrum.mags.size(); ++k) {
        const double m2 = spectrum.mags[k] * spectrum.mags[k];
        // Bins 1..ceil(n/2)-1 stand for a conjugate pair; DC and (even n) Nyquist do not.
        const bool unpaired = k == 0 || (n % 2 == 0 && k == n / 2);
        sum += unpaired ? m2 : 2.0 * m2;
    }
    return grid.dt() * sum / static_cast<double>(n);
}

std::vector<std::size_t> spectral_peaks(const FrequencySpectrum& spectrum, double rel_threshold) {
    std::vector<std::size_t> peaks;
    const auto& m = spectrum.mags;
    if (m.size() < 3) return peaks;
    const double top = *std::max_element(m.begin() + 1, m.end());
    if (top <= 0.0) return peaks;
    for (std::size_t k = 1; k < m.size(); ++k) {
        const bool left = m[k] > m[k - 1];
        const bool right = k + 1 == m.size() || m[k] >= m[k + 1];
        if (left && right && m[k] > rel_threshold * top) peaks.push_back(k);
    }
    return peaks;
}

}  // namespace qrma
