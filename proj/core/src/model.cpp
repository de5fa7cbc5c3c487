#include "qrma/model.hpp"

#include <cmath>
#include <string>

#include "qrma/errors.hpp"

namespace qrma {

namespace {

void require_basis(std::size_t n_max) {
    if (n_max < 2) {
        throw InvalidParameter("n_max must be at least 2, got " + std::to_string(n_max));
    }
}

// Shared skeleton of the spin-boson matrices: field energy on both spin blocks
// plus a linear coupling (a + a^+) times a Pauli matrix.
enum class Pauli { x, z };

Eigen::MatrixXd spin_boson(std::size_t n_max, double field_freq, double offset,
                           Pauli bare, double bare_weight, Pauli coupled, double coupling) {
    const auto n = static_cast<Eigen::Index>(n_max);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (Eigen::Index s = 0; s < 2; ++s) {
        const double sz = s == 0 ? 1.0 : -1.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            h(s * n + i, s * n + i) += field_freq * static_cast<double>(i) + offset;
            if (bare == Pauli::z) h(s * n + i, s * n + i) += bare_weight * sz;
        }
    }
    if (bare == Pauli::x) {
        for (Eigen::Index i = 0; i < n; ++i) {
            h(i, n + i) += bare_weight;
            h(n + i, i) += bare_weight;
        }
    }
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        const double x = coupling * std::sqrt(static_cast<double>(i + 1));
        if (coupled == Pauli::x) {
            h(i, n + i + 1) += x;
            h(i + 1, n + i) += x;
            h(n + i, i + 1) += x;
            h(n + i + 1, i) += x;
        } else {
            h(i, i + 1) += x;
            h(i + 1, i) += x;
            h(n + i, n + i + 1) -= x;
            h(n + i + 1, n + i) -= x;
        }
    }
    return h;
}

}  // namespace

Parity Parity::from_int(int value) {
    if (value != 1 && value != -1) {
        throw InvalidParameter("parity must be +1 or -1, got " + std::to_string(value));
    }
    return Parity(value);
}

void validate(const ModelParams& p) {
    if (!std::isfinite(p.big_delta) || !std::isfinite(p.osc_delta) || !std::isfinite(p.coupling)) {
        throw InvalidParameter("model parameters must be finite");
    }
    if (!(p.big_delta > 0.0)) {
        throw InvalidParameter("big_delta must be positive");
    }
    if (p.coupling < 0.0) {
        throw InvalidParameter("coupling must be non-negative");
    }
    // The oscillator-strength sum rule forces delta >= 1; 0 is the explicit pure-Rabi switch.
    if (p.osc_delta != 0.0 && !(p.osc_delta >= 1.0)) {
        throw InvalidParameter("osc_delta must be 0 or >= 1");
    }
}

DerivedParams derive_params(const ModelParams& p) {
    validate(p);
    DerivedParams d;
    d.k = p.osc_delta * p.coupling * p.coupling / p.big_delta;
    d.omega = std::sqrt(1.0 + 4.0 * d.k);
    d.f_tilde = p.coupling / std::sqrt(d.omega);
    d.shift = 0.5 * (d.omega - 1.0);
    return d;
}

Eigen::MatrixXd build_qrma_dense(const ModelParams& p, std::size_t n_max) {
    require_basis(n_max);
    const DerivedParams d = derive_params(p);
    // a^+ a + k (2 a^+ a + 1) on the diagonal, then the a^2 + a^+2 part.
    Eigen::MatrixXd h = spin_boson(n_max, 1.0 + 2.0 * d.k, d.k, Pauli::z, 0.5 * p.big_delta,
                                   Pauli::x, p.coupling);
    const auto n = static_cast<Eigen::Index>(n_max);
    for (Eigen::Index s = 0; s < 2; ++s) {
        for (Eigen::Index i = 0; i + 2 < n; ++i) {
            const double x = d.k * std::sqrt(static_cast<double>((i + 1) * (i + 2)));
            h(s * n + i, s * n + i + 2) += x;
            h(s * n + i + 2, s * n + i) += x;
        }
    }
    return h;
}

Eigen::MatrixXd build_transformed_dense(const ModelParams& p, std::size_t n_max) {
    require_basis(n_max);
    const DerivedParams d = derive_params(p);
    return spin_boson(n_max, d.omega, d.shift, Pauli::z, 0.5 * p.big_delta, Pauli::x, d.f_tilde);
}

Eigen::MatrixXd build_rotated_dense(const ModelParams& p, std::size_t n_max) {
    require_basis(n_max);
    const DerivedParams d = derive_params(p);
    return spin_boson(n_max, d.omega, d.shift, Pauli::x, 0.5 * p.big_delta, Pauli::z, -d.f_tilde);
}

TridiagonalBlock build_parity_block(const ModelParams& p, Parity parity, std::size_t n_max) {
    require_basis(n_max);
    const DerivedParams d = derive_params(p);
    TridiagonalBlock block;
    block.diag.resize(n_max);
    block.offdiag.resize(n_max - 1);
    const double half_delta = 0.5 * p.big_delta * parity.value();
    for (std::size_t n = 0; n < n_max; ++n) {
        const double alternating = (n % 2 == 0) ? 1.0 : -1.0;
        block.diag[n] = d.omega * static_cast<double>(n) + d.shift + half_delta * alternating;
    }
    for (std::size_t n = 0; n + 1 < n_max; ++n) {
        block.offdiag[n] = -d.f_tilde * std::sqrt(static_cast<double>(n + 1));
    }
    return block;
}

}  // namespace qrma
