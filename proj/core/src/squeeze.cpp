#include "qrma/squeeze.hpp"

#include <cmath>
#include <string>

#include "qrma/errors.hpp"

namespace qrma {

double FockVector::norm_squared() const { return mass_from(0); }

double FockVector::mass_from(std::size_t first) const {
    double sum = 0.0;
    for (std::size_t k = first; k < amps.size(); ++k) sum += std::norm(amps[k]);
    return sum;
}

double FockVector::tail_mass(std::size_t edge) const {
    return mass_from(amps.size() > edge ? amps.size() - edge : 0);
}

double FockVector::mean_photon_number() const {
    double sum = 0.0;
    for (std::size_t k = 0; k < amps.size(); ++k) sum += static_cast<double>(k) * std::norm(amps[k]);
    return sum;
}

Eigen::MatrixXd annihilation_matrix(std::size_t n_max) {
    const auto n = static_cast<Eigen::Index>(n_max);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    return a;
}

Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& a) {
    const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const Eigen::MatrixXd scaled = a / std::ldexp(1.0, squarings);

    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(a.rows(), a.cols());
    Eigen::MatrixXd term = result;
    constexpr int kMaxTerms = 60;
    for (int j = 1; j <= kMaxTerms; ++j) {
        term = (term * scaled) / static_cast<double>(j);
        result += term;
        if (term.cwiseAbs().maxCoeff() <= 1e-14 * result.cwiseAbs().maxCoeff()) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

Eigen::MatrixXd squeeze_matrix(const SqueezeSpec& spec) {
    if (!(spec.omega > 0.0) || !std::isfinite(spec.omega)) {
        throw InvalidParameter("squeeze omega must be positive");
    }
    if (spec.n_max < 1) throw InvalidParameter("squeeze n_max must be positive");
    const auto n = static_cast<Eigen::Index>(spec.n_max);
    if (spec.omega == 1.0) return Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd a = annihilation_matrix(spec.n_max);
    const Eigen::MatrixXd a2 = a * a;
    const Eigen::MatrixXd generator = 0.25 * std::log(spec.omega) * (a2 - a2.transpose());
    return matrix_exponential(generator);
}

FockVector coherent_amplitudes(double epsilon, std::size_t n_max) {
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
        throw InvalidParameter("coherent amplitude epsilon must be non-negative");
    }
    if (n_max < 1) throw InvalidParameter("n_max must be positive");
    FockVector v;
    v.amps.assign(n_max, 0.0);
    if (epsilon <= 30.0) {
        double amp = std::exp(-0.5 * epsilon * epsilon);
        for (std::size_t k = 0; k < n_max; ++k) {
            if (k > 0) amp *= epsilon / std::sqrt(static_cast<double>(k));
            v.amps[k] = amp;
        }
    } else {
        // exp(-eps^2/2) underflows; evaluate each term in log space instead.
        const double log_eps = std::log(epsilon);
        for (std::size_t k = 0; k < n_max; ++k) {
            const double kd = static_cast<double>(k);
            v.amps[k] = std::exp(-0.5 * epsilon * epsilon + kd * log_eps - 0.5 * std::lgamma(kd + 1.0));
        }
    }
    if (v.tail_mass() >= kTailTolerance) {
        throw TruncationError("coherent state with epsilon=" + std::to_string(epsilon) +
                              " does not fit in n_max=" + std::to_string(n_max));
    }
    return v;
}

FockVector squeezed_coherent_overlaps(double epsilon, const SqueezeSpec& spec) {
    if (spec.n_max <= kSqueezeEdgeGuard + 8) {
        throw InvalidParameter("n_max too small for squeezed overlaps");
    }
    const FockVector coherent = coherent_amplitudes(epsilon, spec.n_max);
    const Eigen::MatrixXd s = squeeze_matrix(spec);
    const auto n = static_cast<Eigen::Index>(spec.n_max);
    Eigen::VectorXd c(n);
    for (Eigen::Index k = 0; k < n; ++k) c(k) = coherent.amps[static_cast<std::size_t>(k)].real();
    const Eigen::VectorXd out = s.transpose() * c;

    FockVector v;
    v.amps.resize(spec.n_max);
    for (Eigen::Index k = 0; k < n; ++k) v.amps[static_cast<std::size_t>(k)] = out(k);

    const std::size_t trusted = spec.n_max - kSqueezeEdgeGuard;
    const double edge_mass = v.mass_from(trusted - 8);
    if (edge_mass >= kTailTolerance) {
        throw TruncationError("squeezed coherent state with epsilon=" + std::to_string(epsilon) +
                              " does not fit in n_max=" + std::to_string(spec.n_max));
    }
    return v;
}

}  // namespace qrma
