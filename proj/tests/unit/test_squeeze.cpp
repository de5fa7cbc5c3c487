#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qrma/errors.hpp"
#include "qrma/squeeze.hpp"

using namespace qrma;

namespace {

double number_expectation(const Eigen::VectorXd& v) {
    double sum = 0.0;
    for (Eigen::Index k = 0; k < v.size(); ++k) sum += static_cast<double>(k) * v(k) * v(k);
    return sum;
}

}  // namespace

TEST_CASE("matrix_exponential of a rotation generator") {
    Eigen::MatrixXd g(2, 2);
    g << 0.0, 2.3, -2.3, 0.0;
    const Eigen::MatrixXd e = matrix_exponential(g);
    CHECK(e(0, 0) == doctest::Approx(std::cos(2.3)).epsilon(1e-14));
    CHECK(e(0, 1) == doctest::Approx(std::sin(2.3)).epsilon(1e-14));
    CHECK(e(1, 0) == doctest::Approx(-std::sin(2.3)).epsilon(1e-14));
    CHECK(matrix_exponential(Eigen::MatrixXd::Zero(3, 3)) == Eigen::MatrixXd::Identity(3, 3));
}

TEST_CASE("squeeze_matrix: Omega = 1 is the identity") {
    CHECK(squeeze_matrix({1.0, 32}) == Eigen::MatrixXd::Identity(32, 32));
}

TEST_CASE("squeeze_matrix: squeezed vacuum photon number at Omega = sqrt 2") {
    const double omega = std::sqrt(2.0);
    const Eigen::MatrixXd s = squeeze_matrix({omega, 128});
    const Eigen::VectorXd vac = s.col(0);
    // (Omega-1)^2/(4 Omega) = sinh^2(ln(Omega)/2), 40-digit mpmath value.
    CHECK(number_expectation(vac) == doctest::Approx(0.030330085889910643301).epsilon(1e-10));
    CHECK(std::abs(number_expectation(vac) - std::pow(std::sinh(0.5 * std::log(omega)), 2)) < 1e-10);
}

TEST_CASE("squeeze_matrix: vacuum column matches the closed-form squeezed vacuum") {
    for (double omega : {0.5, 1.1, std::sqrt(2.0), 2.0, 3.0}) {
        const Eigen::VectorXd numeric = squeeze_matrix({omega, 160}).col(0);
        const Eigen::VectorXd closed = oracle::squeezed_vacuum(omega, 160);
        CHECK((numeric - closed).head(140).cwiseAbs().maxCoeff() < 1e-12);
        for (Eigen::Index k = 1; k < 160; k += 2) CHECK(numeric(k) == 0.0);
    }
}

TEST_CASE("squeeze_matrix: orthogonal on the trusted block") {
    const std::size_t n = 256;
    const Eigen::MatrixXd s = squeeze_matrix({2.0, n});
    const auto m = static_cast<Eigen::Index>(n - kSqueezeEdgeGuard);
    const Eigen::MatrixXd sts = s.transpose() * s;
    CHECK((sts.topLeftCorner(m, m) - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("squeeze_matrix: S(Omega) S(1/Omega) is the identity on the interior") {
    const std::size_t n = 200;
    const Eigen::MatrixXd prod = squeeze_matrix({1.7, n}) * squeeze_matrix({1.0 / 1.7, n});
    const Eigen::Index m = 150;
    CHECK((prod.topLeftCorner(m, m) - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("squeezed vacuum photon number identity for several Omega") {
    for (double omega : {1.1, std::sqrt(2.0), 2.0}) {
        const double numeric = number_expectation(squeeze_matrix({omega, 256}).col(0));
        CHECK(std::abs(numeric - (omega - 1) * (omega - 1) / (4 * omega)) < 1e-9);
    }
}

TEST_CASE("coherent_amplitudes") {
    SUBCASE("vacuum") {
        const FockVector v = coherent_amplitudes(0.0, 16);
        CHECK(v.amps[0] == std::complex<double>(1.0));
        for (std::size_t k = 1; k < 16; ++k) CHECK(v.amps[k] == std::complex<double>(0.0));
    }
    SUBCASE("Poisson mean") {
        CHECK(std::abs(coherent_amplitudes(5.0, 128).mean_photon_number() - 25.0) < 1e-8);
    }
    SUBCASE("normalized") {
        for (double eps : {0.3, 1.0, 2.5, 5.0, 8.0, 35.0}) {
            CHECK(std::abs(coherent_amplitudes(eps, 2048).norm_squared() - 1.0) < 1e-12);
        }
    }
    SUBCASE("too small a basis") {
        CHECK_THROWS_AS(coherent_amplitudes(5.0, 32), TruncationError);
        CHECK_THROWS_AS(coherent_amplitudes(-1.0, 32), InvalidParameter);
    }
}

TEST_CASE("squeezed_coherent_overlaps") {
    SUBCASE("no squeeze leaves the coherent state") {
        const FockVector a = squeezed_coherent_overlaps(3.0, {1.0, 96});
        const FockVector b = coherent_amplitudes(3.0, 96);
        for (std::size_t k = 0; k < 96; ++k) CHECK(a.amps[k] == b.amps[k]);
    }
    SUBCASE("squeezed vacuum populates only even states") {
        const FockVector v = squeezed_coherent_overlaps(0.0, {std::sqrt(2.0), 64});
        for (std::size_t k = 1; k < 64; k += 2) CHECK(v.amps[k] == std::complex<double>(0.0));
        CHECK(v.amps[2].real() != 0.0);
    }
    SUBCASE("unitarity at eps = 5, n_max = 512") {
        const FockVector v = squeezed_coherent_overlaps(5.0, {std::sqrt(2.0), 512});
        CHECK(std::abs(v.norm_squared() - 1.0) < 1e-8);
    }
    SUBCASE("matches the displaced-squeezed recurrence") {
        for (double omega : {0.8, 1.077, std::sqrt(2.0)}) {
            const FockVector v = squeezed_coherent_overlaps(4.0, {omega, 160});
            const Eigen::VectorXd ref = oracle::squeezed_coherent_recurrence(4.0, omega, 100);
            for (Eigen::Index k = 0; k < 100; ++k) CHECK(std::abs(v.amps[static_cast<std::size_t>(k)].real() - ref(k)) < 1e-10);
        }
    }
    SUBCASE("mean photon number is eps^2 Omega + (Omega-1)^2/(4 Omega)") {
        // S^+|eps> = D(eps sqrt(Omega)) S^+|0>. The renormalized RWA amplitude
        // eps (Omega+1)/(2 sqrt(Omega)) only agrees with this to zeroth order in Omega - 1.
        for (double omega : {1.0, 1.077, 1.5}) {
            const FockVector v = squeezed_coherent_overlaps(5.0, {omega, 256});
            const double expected = 25.0 * omega + (omega - 1) * (omega - 1) / (4 * omega);
            CHECK(std::abs(v.mean_photon_number() - expected) < 1e-8);
        }
    }
    SUBCASE("edge check") {
        CHECK_THROWS_AS(squeezed_coherent_overlaps(5.0, {std::sqrt(2.0), 64}), TruncationError);
    }
}
