#include "qrma/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "qrma/errors.hpp"
#include "qrma/rwa.hpp"

namespace qrma {

Truncation Truncation::fixed(std::size_t n_max) {
    if (n_max < 2) throw InvalidParameter("n_max must be at least 2");
    return Truncation(n_max);
}

EigenSolution solve_block(const TridiagonalBlock& block, std::size_t levels, Parity parity) {
    if (levels > block.size()) {
        throw InvalidParameter("requested " + std::to_string(levels) + " levels from a block of size " +
                               std::to_string(block.size()));
    }
    if (levels == 0) levels = block.size();
    TridiagonalEigen eig = tridiagonal_eigensystem(block);
    EigenSolution sol;
    sol.parity = parity;
    sol.n_max = block.size();
    sol.energies.assign(eig.values.begin(), eig.values.begin() + static_cast<std::ptrdiff_t>(levels));
    sol.vectors = eig.vectors.leftCols(static_cast<Eigen::Index>(levels));
    return sol;
}

EigenSolution solve_sector(const ModelParams& p, Parity parity, std::size_t levels,
                           Truncation truncation) {
    if (levels == 0) throw InvalidParameter("levels must be positive");
    if (!truncation.is_automatic()) {
        return solve_block(build_parity_block(p, parity, truncation.n_max()), levels, parity);
    }

    std::size_t n = Truncation::kAutoStart;
    while (n < 2 * levels) n *= 2;
    if (n > Truncation::kAutoCap) {
        throw InvalidParameter("too many levels requested for automatic truncation");
    }
    std::vector<double> previous = tridiagonal_eigenvalues(build_parity_block(p, parity, n));
    bool converged = false;
    while (n < Truncation::kAutoCap) {
        n *= 2;
        const std::vector<double> current = tridiagonal_eigenvalues(build_parity_block(p, parity, n));
        double change = 0.0;
        for (std::size_t j = 0; j < levels; ++j) {
            change = std::max(change, std::abs(current[j] - previous[j]));
        }
        previous = current;
        if (change < Truncation::kAutoTolerance) {
            converged = true;
            break;
        }
    }
    EigenSolution sol = solve_block(build_parity_block(p, parity, n), levels, parity);
    sol.converged = converged;
    return sol;
}

GroundState ground_state(const ModelParams& p, Truncation truncation) {
    const EigenSolution odd = solve_sector(p, Parity::odd(), 1, truncation);
    const EigenSolution even = solve_sector(p, Parity::even(), 1, truncation);
    const EigenSolution& best = even.energies[0] < odd.energies[0] ? even : odd;
    GroundState gs;
    gs.energy = best.energies[0];
    gs.parity = best.parity;
    gs.vector = best.vectors.col(0);
    gs.n_max = best.n_max;
    gs.converged = odd.converged && even.converged;
    return gs;
}

double photon_number_exact(const Eigen::Ref<const Eigen::VectorXd>& c, double omega) {
    if (!(omega > 0.0)) throw InvalidParameter("omega must be positive");
    const Eigen::Index n = c.size();
    double diagonal = 0.0;
    double pairing = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        diagonal += static_cast<double>(k) * c(k) * c(k);
        if (k + 2 < n) {
            pairing += std::sqrt(static_cast<double>((k + 1) * (k + 2))) * 2.0 * c(k) * c(k + 2);
        }
    }
    return (omega - 1.0) * (omega - 1.0) / (4.0 * omega) +
           (omega * omega + 1.0) / (2.0 * omega) * diagonal + 0.25 * (1.0 / omega - omega) * pairing;
}

std::vector<double> find_sign_changes(const std::function<double(double)>& g, double lo,
                                      double hi, int grid, double tol) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw InvalidParameter("crossing range must be finite");
    if (grid < 2) throw InvalidParameter("crossing search needs at least 2 grid points");
    std::vector<double> roots;
    if (!(hi > lo)) return roots;
    const std::vector<double> xs = linear_grid(lo, hi, static_cast<std::size_t>(grid));
    std::vector<double> values(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) values[i] = g(xs[i]);

    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (values[i] == 0.0) {
            roots.push_back(xs[i]);
            continue;
        }
        if (i + 1 == xs.size() || values[i + 1] == 0.0) continue;
        if ((values[i] < 0.0) == (values[i + 1] < 0.0)) continue;
        double a = xs[i];
        double b = xs[i + 1];
        const bool negative_at_a = values[i] < 0.0;
        while (b - a >= tol) {
            const double mid = 0.5 * (a + b);
            const double gm = g(mid);
            if (gm == 0.0) {
                a = b = mid;
                break;
            }
            if ((gm < 0.0) == negative_at_a) {
                a = mid;
            } else {
                b = mid;
            }
        }
        roots.push_back(0.5 * (a + b));
    }
    return roots;
}

namespace {

ModelParams with_coupling(ModelParams family, double f) {
    family.coupling = f;
    return family;
}

}  // namespace

std::vector<double> find_rwar_crossings(const ModelParams& family, int n, double f_lo,
                                        double f_hi, int grid) {
    if (n < 0) throw InvalidParameter("level index must be non-negative");
    validate(with_coupling(family, 0.0));
    if (f_lo < 0.0) throw InvalidParameter("coupling range must be non-negative");
    auto gap = [&](double f) {
        const ModelParams p = with_coupling(family, f);
        return rwar_excited(p, n + 2).minus.energy - rwar_excited(p, n).minus.energy;
    };
    return find_sign_changes(gap, f_lo, f_hi, grid);
}

std::vector<double> find_exact_crossings(const ModelParams& family, int n, double f_lo,
                                         double f_hi, int grid, Truncation truncation) {
    if (n < 0) throw InvalidParameter("level index must be non-negative");
    validate(with_coupling(family, 0.0));
    if (f_lo < 0.0) throw InvalidParameter("coupling range must be non-negative");
    const Parity parity = n % 2 == 0 ? Parity::even() : Parity::odd();
    const auto upper = static_cast<std::size_t>(n + 2);
    auto gap = [&](double f) {
        const EigenSolution sol = solve_sector(with_coupling(family, f), parity, upper + 1, truncation);
        if (!sol.converged) {
            throw ConvergenceError("exact levels did not converge at f=" + std::to_string(f));
        }
        return sol.energies[upper] - sol.energies[static_cast<std::size_t>(n)];
    };
    return find_sign_changes(gap, f_lo, f_hi, grid);
}

std::vector<SpectrumRow> sweep(const ModelParams& family, const std::vector<double>& couplings,
                               std::size_t levels, Truncation truncation) {
    if (couplings.empty()) throw InvalidParameter("sweep needs at least one coupling");
    if (levels == 0) throw InvalidParameter("levels must be positive");
    std::vector<SpectrumRow> rows;
    rows.reserve(couplings.size() * levels * 2);
    for (double f : couplings) {
        const ModelParams p = with_coupling(family, f);
        const DerivedParams d = derive_params(p);
        for (Parity parity : {Parity::odd(), Parity::even()}) {
            const EigenSolution sol = solve_sector(p, parity, levels, truncation);
            const std::vector<RwaLevel> rwar = rwar_sector_levels(p, parity, levels);
            for (std::size_t j = 0; j < levels; ++j) {
                SpectrumRow row;
                row.f = f;
                row.parity = parity;
                row.level = j;
                row.e_exact = sol.energies[j];
                row.e_rwar = rwar[j].energy;
                row.photon_exact = photon_number_exact(sol.vectors.col(static_cast<Eigen::Index>(j)), d.omega);
                row.photon_rwa = rwar_level_photon_number(p, rwar[j]);
                row.converged = sol.converged;
                rows.push_back(row);
            }
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const SpectrumRow& a, const SpectrumRow& b) {
        return std::make_tuple(a.f, a.parity.value(), a.level) <
               std::make_tuple(b.f, b.parity.value(), b.level);
    });
    return rows;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t steps) {
    if (steps == 0) throw InvalidParameter("grid needs at least one point");
    std::vector<double> xs(steps);
    if (steps == 1) {
        xs[0] = lo;
        return xs;
    }
    const double step = (hi - lo) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) xs[i] = lo + step * static_cast<double>(i);
    xs.back() = hi;
    return xs;
}

}  // namespace qrma
