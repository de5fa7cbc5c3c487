#include <doctest.h>

#include <chrono>
#include <cmath>

#include "oracles.hpp"
#include "qrma/errors.hpp"
#include "qrma/rwa.hpp"
#include "qrma/spectrum.hpp"

using namespace qrma;

TEST_CASE("ground_state: uncoupled atom sits in chi_down |0>, parity -1") {
    const GroundState gs = ground_state({1.0, 1.0, 0.0});
    CHECK(gs.energy == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(gs.parity == Parity::odd());
    CHECK(gs.converged);
    CHECK(gs.vector(0) == doctest::Approx(1.0));
}

TEST_CASE("ground_state: plain Rabi model binds below the uncoupled energy") {
    CHECK(ground_state({1.0, 0.0, 1.0}).energy < -0.5);
}

TEST_CASE("ground_state: with the A^2 term the energy rises with f") {
    double previous = ground_state({1.0, 1.0, 0.0}).energy;
    for (double f : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const double e = ground_state({1.0, 1.0, f}).energy;
        CHECK(e > previous);
        CHECK(e > -0.5);
        previous = e;
    }
}

TEST_CASE("variational bound against the RWAR ground state") {
    const double bound = rwar_ground({1.0, 1.0, 0.6});
    CHECK(bound == doctest::Approx(-0.21897503240933456059).epsilon(1e-14));
    CHECK(ground_state({1.0, 1.0, 0.6}).energy <= bound);
    for (double delta : {0.0, 1.0, 2.0, 4.0}) {
        for (double f : {0.1, 0.5, 1.5, 3.0}) {
            for (double big : {0.5, 1.0, 2.0}) {
                const ModelParams p{big, delta, f};
                CHECK(ground_state(p).energy <= rwar_ground(p) + 1e-14);
            }
        }
    }
}

TEST_CASE("automatic truncation is converged") {
    for (const ModelParams& p : {ModelParams{1.0, 1.0, 1.0}, ModelParams{1.0, 0.0, 1.5}, ModelParams{0.5, 3.0, 2.0}}) {
        for (Parity parity : {Parity::even(), Parity::odd()}) {
            const EigenSolution a = solve_sector(p, parity, 8);
            REQUIRE(a.converged);
            const EigenSolution b = solve_sector(p, parity, 8, Truncation::fixed(2 * a.n_max));
            for (std::size_t j = 0; j < 8; ++j) CHECK(std::abs(a.energies[j] - b.energies[j]) < 1e-10);
        }
    }
}

TEST_CASE("photon_number_exact") {
    Eigen::VectorXd vac = Eigen::VectorXd::Zero(10);
    vac(0) = 1.0;
    CHECK(photon_number_exact(vac, 1.0) == 0.0);
    CHECK(photon_number_exact(vac, std::sqrt(2.0)) == doctest::Approx(0.030330085889910643301).epsilon(1e-14));
    CHECK_THROWS_AS(photon_number_exact(vac, 0.0), InvalidParameter);

    for (unsigned seed = 0; seed < 5; ++seed) {
        const Eigen::VectorXd c = oracle::random_unit_vector(40, 40, seed);
        for (Parity parity : {Parity::even(), Parity::odd()}) {
            const double dense = oracle::dense_photon_number(c, parity, 1.3, 200);
            CHECK(std::abs(photon_number_exact(c, 1.3) - dense) < 1e-8);
        }
    }
}

TEST_CASE("photon_number_exact of the ground state matches the dense oracle") {
    for (double f : {0.3, 0.8}) {
        const ModelParams p{1.0, 1.0, f};
        const GroundState gs = ground_state(p);
        const double omega = derive_params(p).omega;
        const double dense = oracle::dense_photon_number(gs.vector, gs.parity, omega, gs.n_max + 64);
        CHECK(std::abs(photon_number_exact(gs.vector, omega) - dense) < 1e-8);
    }
}

TEST_CASE("find_sign_changes") {
    const auto roots = find_sign_changes([](double x) { return std::cos(x); }, 0.0, 10.0, 50);
    REQUIRE(roots.size() == 3);
    CHECK(std::abs(roots[0] - M_PI / 2) < 1e-10);
    CHECK(std::abs(roots[2] - 5 * M_PI / 2) < 1e-10);
    CHECK(find_sign_changes([](double) { return 1.0; }, 0.0, 1.0, 10).empty());
    CHECK(find_sign_changes([](double x) { return x - 0.5; }, 1.0, 1.0, 10).empty());
    CHECK_THROWS_AS(find_sign_changes([](double x) { return x; }, 0.0, 1.0, 1), InvalidParameter);
}

TEST_CASE("RWA crossing at resonance, delta = 0") {
    const auto roots = find_rwar_crossings({1.0, 0.0, 0.0}, 0, 0.0, 5.0, 200);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0] - (std::sqrt(3.0) + 1.0)) < 1e-8);
}

TEST_CASE("RWAR with delta = 1 never reaches the same-parity degeneracy") {
    // E^-_{n+2} - E^-_n >= 2 Omega - f~ > 0 for all f; the search finds nothing even far out.
    for (int n : {0, 1, 3}) CHECK(find_rwar_crossings({1.0, 1.0, 0.0}, n, 0.0, 1000.0, 4000).empty());
}

TEST_CASE("exact levels tracked by index never cross within a sector") {
    CHECK(find_exact_crossings({1.0, 0.0, 0.0}, 0, 0.0, 4.0, 41).empty());
}

TEST_CASE("sweep at f = 0 reproduces the uncoupled spectrum") {
    const auto rows = sweep({1.0, 1.0, 0.0}, {0.0}, 3);
    REQUIRE(rows.size() == 6);
    const std::vector<double> odd{-0.5, 1.5, 1.5};
    const std::vector<double> even{0.5, 0.5, 2.5};
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(rows[j].parity == Parity::odd());
        CHECK(rows[j].level == j);
        CHECK(rows[j].e_exact == doctest::Approx(odd[j]));
        CHECK(rows[j].e_rwar == doctest::Approx(odd[j]));
        CHECK(rows[3 + j].parity == Parity::even());
        CHECK(rows[3 + j].e_exact == doctest::Approx(even[j]));
        CHECK(rows[3 + j].e_rwar == doctest::Approx(even[j]));
    }
}

TEST_CASE("sweep rows are consistent with individual computations") {
    const ModelParams family{1.0, 1.0, 0.0};
    const auto rows = sweep(family, {0.25, 0.5}, 4);
    REQUIRE(rows.size() == 16);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].f <= rows[i].f);
    const GroundState gs = ground_state({1.0, 1.0, 0.5});
    const SpectrumRow& r = rows[8];
    CHECK(r.f == 0.5);
    CHECK(r.parity == gs.parity);
    CHECK(r.level == 0);
    CHECK(r.e_exact == gs.energy);
    CHECK(r.e_rwar == rwar_ground({1.0, 1.0, 0.5}));
    CHECK(r.photon_rwa == doctest::Approx(rwa_photon_number({1.0, 1.0, 0.5})).epsilon(1e-14));
    CHECK(r.photon_exact == photon_number_exact(gs.vector, derive_params({1.0, 1.0, 0.5}).omega));
}

TEST_CASE("sweep of 101 couplings runs at desk scale") {
    const auto start = std::chrono::steady_clock::now();
    const auto rows = sweep({1.0, 1.0, 0.0}, linear_grid(0.0, 1.0, 101), 6);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(rows.size() == 101 * 12);
    CHECK(seconds < 10.0);
    for (const auto& r : rows) CHECK(r.converged);
}

TEST_CASE("linear_grid") {
    CHECK(linear_grid(0.0, 1.0, 1) == std::vector<double>{0.0});
    const auto g = linear_grid(0.0, 1.0, 5);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK(g[2] == 0.5);
    CHECK_THROWS_AS(linear_grid(0.0, 1.0, 0), InvalidParameter);
}
