#include "qrma/rwa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qrma/errors.hpp"

namespace qrma {

namespace {

constexpr double kPoissonTailTolerance = 1e-12;

RwaLevel make_level(int n, int sign, double energy, double lambda) {
    RwaLevel level;
    level.n = n;
    level.sign = sign;
    level.energy = energy;
    level.lambda = lambda;
    if (std::isinf(lambda)) {
        level.a_coeff = 0.0;
        level.b_coeff = lambda > 0 ? -1.0 : 1.0;
    } else {
        const double norm = std::sqrt(1.0 + lambda * lambda);
        level.a_coeff = 1.0 / norm;
        level.b_coeff = -lambda / norm;
    }
    return level;
}

std::vector<double> poisson_weights(double mean, int n_terms) {
    std::vector<double> w(static_cast<std::size_t>(n_terms));
    if (mean == 0.0) {
        w[0] = 1.0;
        return w;
    }
    const double log_mean = std::log(mean);
    for (int n = 0; n < n_terms; ++n) {
        w[static_cast<std::size_t>(n)] =
            std::exp(-mean + n * log_mean - std::lgamma(static_cast<double>(n) + 1.0));
    }
    return w;
}

}  // namespace

double rwar_ground(const ModelParams& p) {
    const DerivedParams d = derive_params(p);
    return -0.5 * p.big_delta + d.shift;
}

RwaDoublet rwar_excited(const ModelParams& p, int n) {
    if (n < 0) throw InvalidParameter("RWA level index must be non-negative");
    const DerivedParams d = derive_params(p);
    const double detuning = p.big_delta - d.omega;
    const double n1 = static_cast<double>(n) + 1.0;
    const double half_split = std::sqrt(0.25 * detuning * detuning + d.f_tilde * d.f_tilde * n1);
    const double center = d.omega * n1 - 0.5;

    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    if (d.f_tilde > 0.0) {
        const double root = std::sqrt(detuning * detuning + 4.0 * d.f_tilde * d.f_tilde * n1);
        const double denom = 2.0 * d.f_tilde * std::sqrt(n1);
        lambda_plus = (detuning - root) / denom;
        lambda_minus = (detuning + root) / denom;
    } else {
        // Uncoupled limit of the mixing ratio: chi_up |n> lies D - Omega above chi_down |n+1>.
        constexpr double inf = std::numeric_limits<double>::infinity();
        if (detuning > 0.0) {
            lambda_plus = 0.0;
            lambda_minus = inf;
        } else if (detuning < 0.0) {
            lambda_plus = -inf;
            lambda_minus = 0.0;
        } else {
            lambda_plus = -1.0;
            lambda_minus = 1.0;
        }
    }
    return RwaDoublet{make_level(n, +1, center + half_split, lambda_plus),
                      make_level(n, -1, center - half_split, lambda_minus)};
}

double rwa_photon_number(const ModelParams& p) {
    const DerivedParams d = derive_params(p);
    return (d.omega - 1.0) * (d.omega - 1.0) / (4.0 * d.omega);
}

double rwar_level_photon_number(const ModelParams& p, const RwaLevel& level) {
    const DerivedParams d = derive_params(p);
    const double occupation = level.a_coeff * level.a_coeff * level.n +
                              level.b_coeff * level.b_coeff * (level.n + 1);
    return rwa_photon_number(p) + (d.omega * d.omega + 1.0) / (2.0 * d.omega) * occupation;
}

RwaLevel rwar_ground_level(const ModelParams& p) {
    RwaLevel level;
    level.n = -1;
    level.sign = -1;
    level.energy = rwar_ground(p);
    level.a_coeff = 0.0;
    level.b_coeff = 1.0;
    level.lambda = -std::numeric_limits<double>::infinity();
    return level;
}

std::vector<RwaLevel> rwar_sector_levels(const ModelParams& p, Parity parity, std::size_t count) {
    std::vector<RwaLevel> levels;
    if (count == 0) return levels;
    if (parity == Parity::odd()) levels.push_back(rwar_ground_level(p));
    // Doublet centres grow like Omega n while splittings grow like sqrt(n), so a margin
    // of doublets past `count` captures the lowest `count` sector levels.
    const int first = parity == Parity::even() ? 0 : 1;
    const int last = 2 * static_cast<int>(count) + 64;
    for (int n = first; n <= last; n += 2) {
        const RwaDoublet doublet = rwar_excited(p, n);
        levels.push_back(doublet.minus);
        levels.push_back(doublet.plus);
    }
    std::stable_sort(levels.begin(), levels.end(),
                     [](const RwaLevel& a, const RwaLevel& b) { return a.energy < b.energy; });
    levels.resize(count);
    return levels;
}

double rabi_frequency(const ModelParams& p, int n) {
    const DerivedParams d = derive_params(p);
    const double detuning = p.big_delta - d.omega;
    return std::sqrt(detuning * detuning + 4.0 * d.f_tilde * d.f_tilde * (n + 1.0));
}

double renormalized_amplitude(const ModelParams& p, double epsilon) {
    const DerivedParams d = derive_params(p);
    return epsilon * (d.omega + 1.0) / (2.0 * std::sqrt(d.omega));
}

int default_poisson_terms(const ModelParams& p, double epsilon) {
    const double e2 = std::pow(renormalized_amplitude(p, epsilon), 2);
    return static_cast<int>(std::ceil(e2 + 12.0 * std::sqrt(e2 + 1.0)));
}

std::vector<double> rwa_inversion_series(const ModelParams& p, double epsilon,
                                         const std::vector<double>& times, int n_terms) {
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
        throw InvalidParameter("coherent amplitude epsilon must be non-negative");
    }
    const DerivedParams d = derive_params(p);
    if (n_terms <= 0) n_terms = default_poisson_terms(p, epsilon);
    const double mean = std::pow(renormalized_amplitude(p, epsilon), 2);
    const std::vector<double> weights = poisson_weights(mean, n_terms);
    double kept = 0.0;
    for (double w : weights) kept += w;
    if (1.0 - kept > kPoissonTailTolerance) {
        throw TruncationError("RWA inversion: " + std::to_string(n_terms) +
                              " Poisson terms leave tail weight " + std::to_string(1.0 - kept));
    }

    const double detuning2 = std::pow(p.big_delta - d.omega, 2);
    std::vector<double> w(times.size(), 0.0);
    for (int n = 0; n < n_terms; ++n) {
        const double weight = weights[static_cast<std::size_t>(n)];
        if (weight == 0.0) continue;
        const double coupling2 = 4.0 * d.f_tilde * d.f_tilde * (n + 1.0);
        const double freq2 = detuning2 + coupling2;
        if (freq2 == 0.0) {
            // Resonant and uncoupled: the bracket over w_A^2 tends to 1.
            for (double& x : w) x += weight;
            continue;
        }
        const double freq = std::sqrt(freq2);
        for (std::size_t i = 0; i < times.size(); ++i) {
            w[i] += weight * (detuning2 + coupling2 * std::cos(freq * times[i])) / freq2;
        }
    }
    return w;
}

double rwa_inversion(const ModelParams& p, double epsilon, double t, int n_terms) {
    return rwa_inversion_series(p, epsilon, {t}, n_terms).front();
}

}  // namespace qrma
