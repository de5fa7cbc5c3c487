#pragma once

#include <cstddef>
#include <vector>

#include "qrma/model.hpp"

namespace qrma {

/// One member of the rotating-wave doublet built on chi_up |n> and chi_down |n+1>
/// (both in the squeezed basis):  |psi> = A chi_up |n, Omega> + B chi_down |n+1, Omega>.
struct RwaLevel {
    int n = 0;
    int sign = 1;  ///< +1 for the upper member, -1 for the lower
    double energy = 0.0;
    double a_coeff = 0.0;
    double b_coeff = 0.0;
    /// B = -lambda A. Infinite when the level is purely chi_down (uncoupled, D > Omega branch).
    double lambda = 0.0;
};

struct RwaDoublet {
    RwaLevel plus;
    RwaLevel minus;
};

/// -D/2 + (Omega - 1)/2, the energy of chi_down |0, Omega>.
double rwar_ground(const ModelParams& p);

/// E(+/-) = Omega (n + 1) - 1/2 +/- sqrt((D - Omega)^2/4 + f~^2 (n + 1)) with the
/// mixing coefficients of the doublet.
RwaDoublet rwar_excited(const ModelParams& p, int n);

/// Photon number of the renormalized vacuum, (Omega - 1)^2 / (4 Omega).
double rwa_photon_number(const ModelParams& p);

/// Lab-frame photon number of an RWAR level: the renormalized-vacuum offset plus
/// ((Omega^2 + 1)/(2 Omega)) times the squeezed-basis occupation.
double rwar_level_photon_number(const ModelParams& p, const RwaLevel& level);

/// The renormalized vacuum chi_down |0, Omega> written as an RwaLevel with n = -1,
/// A = 0, B = 1, so it slots into sector listings next to the doublets.
RwaLevel rwar_ground_level(const ModelParams& p);

/// The lowest `count` RWAR levels of one combined-parity sector, by ascending energy.
/// Sector p = -1 holds the ground state and the doublets with odd n, sector p = +1
/// the doublets with even n.
std::vector<RwaLevel> rwar_sector_levels(const ModelParams& p, Parity parity, std::size_t count);

/// Rabi frequency sqrt((D - Omega)^2 + 4 f~^2 (n + 1)).
double rabi_frequency(const ModelParams& p, int n);

/// eps (Omega + 1) / (2 sqrt(Omega)), the coherent amplitude used in the RWAR inversion.
double renormalized_amplitude(const ModelParams& p, double epsilon);

/// ceil(eps~^2 + 12 sqrt(eps~^2 + 1)).
int default_poisson_terms(const ModelParams& p, double epsilon);

/// Inversion of the population for chi_down |eps> in the renormalized RWA:
///   W(t) = sum_n P(n; eps~^2) [ (D - Omega)^2 + 4 f~^2 (n + 1) cos(w_A(n) t) ] / w_A(n)^2
/// truncated after n_terms Poisson terms. Throws TruncationError when the dropped
/// Poisson weight exceeds 1e-12. n_terms <= 0 selects default_poisson_terms.
double rwa_inversion(const ModelParams& p, double epsilon, double t, int n_terms = 0);

/// The same series evaluated on many times at once.
std::vector<double> rwa_inversion_series(const ModelParams& p, double epsilon,
                                         const std::vector<double>& times, int n_terms = 0);

}  // namespace qrma
