#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "qrma/model.hpp"
#include "qrma/tridiagonal.hpp"

namespace qrma {

/// Basis-size policy for the parity blocks.
///
/// Automatic mode starts at kAutoStart Fock states and doubles until every requested
/// eigenvalue moves by less than kAutoTolerance, giving up at kAutoCap.
class Truncation {
public:
    static constexpr std::size_t kAutoStart = 64;
    static constexpr std::size_t kAutoCap = 4096;
    static constexpr double kAutoTolerance = 1e-10;

    static Truncation automatic() { return Truncation(0); }
    /// Throws InvalidParameter for n_max < 2.
    static Truncation fixed(std::size_t n_max);

    bool is_automatic() const { return n_max_ == 0; }
    std::size_t n_max() const { return n_max_; }

private:
    explicit Truncation(std::size_t n) : n_max_(n) {}
    std::size_t n_max_;
};

/// Lowest eigenpairs of one parity sector.
///
/// Column j of `vectors` holds the coefficients C^{jp}_l over Fock index l of the
/// single-component wave function; the full spinor state is
///   sum_l C_l ((-1)^l p + 1, (-1)^l p - 1)^T / 2  S|l>.
struct EigenSolution {
    Parity parity = Parity::even();
    std::vector<double> energies;
    Eigen::MatrixXd vectors;
    std::size_t n_max = 0;
    bool converged = true;

    std::size_t levels() const { return energies.size(); }
};

/// Lowest `levels` eigenpairs of a parity block via implicit QL. levels == 0 keeps all.
EigenSolution solve_block(const TridiagonalBlock& block, std::size_t levels,
                          Parity parity = Parity::even());

/// Builds and solves one parity sector, applying the truncation policy. When the
/// automatic search hits the cap the returned solution has converged == false.
EigenSolution solve_sector(const ModelParams& p, Parity parity, std::size_t levels,
                           Truncation truncation = Truncation::automatic());

struct GroundState {
    double energy = 0.0;
    Parity parity = Parity::odd();
    Eigen::VectorXd vector;
    std::size_t n_max = 0;
    bool converged = true;
};

/// Minimum over both parity sectors. Exact ties resolve to p = -1, the sector of the
/// uncoupled ground state.
GroundState ground_state(const ModelParams& p, Truncation truncation = Truncation::automatic());

/// Lab-frame photon number <a^+ a> of the eigenstate with single-component
/// coefficients c (unit norm):
///   (Omega-1)^2/(4 Omega) + (Omega^2+1)/(2 Omega) sum_k k c_k^2
///     + (1/Omega - Omega)/4 sum_k sqrt((k+1)(k+2)) 2 c_k c_{k+2}.
double photon_number_exact(const Eigen::Ref<const Eigen::VectorXd>& c, double omega);

/// Roots of g on [lo, hi]: every sign change between adjacent points of a uniform grid
/// of `grid` points, refined by bisection until the bracket is narrower than `tol`.
/// Returns an empty list when g never changes sign.
std::vector<double> find_sign_changes(const std::function<double(double)>& g, double lo,
                                      double hi, int grid, double tol = 1e-10);

/// Couplings where the RWAR levels E^-_{n+2} and E^-_n become degenerate.
/// `family` supplies big_delta and osc_delta; its coupling is ignored.
std::vector<double> find_rwar_crossings(const ModelParams& family, int n, double f_lo,
                                        double f_hi, int grid);

/// The same condition on exact levels. The exact counterpart of E^-_n is level index n
/// of sector p = (-1)^n; levels are tracked by index, not by continuity.
std::vector<double> find_exact_crossings(const ModelParams& family, int n, double f_lo,
                                         double f_hi, int grid,
                                         Truncation truncation = Truncation::automatic());

/// Data behind the energy and photon-number curves.
struct SpectrumRow {
    double f = 0.0;
    Parity parity = Parity::odd();
    std::size_t level = 0;  ///< ascending index within the parity sector
    double e_exact = 0.0;
    double e_rwar = 0.0;
    double photon_exact = 0.0;
    double photon_rwa = 0.0;
    bool converged = true;
};

/// For each coupling in `couplings`, the lowest `levels` states of both parity sectors,
/// paired with the RWAR level of the same sector and rank. Rows are ordered by f, then
/// parity (-1 first), then level.
std::vector<SpectrumRow> sweep(const ModelParams& family, const std::vector<double>& couplings,
                               std::size_t levels, Truncation truncation = Truncation::automatic());

/// `steps` equally spaced points on [lo, hi]; a single step yields {lo}.
std::vector<double> linear_grid(double lo, double hi, std::size_t steps);

}  // namespace qrma
