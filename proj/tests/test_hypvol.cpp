#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "divlink/error.hpp"
#include "divlink/hypvol.hpp"

using namespace divlink;
using std::numbers::pi;

namespace {

// Lobachevsky function from its Fourier series, with the tail of the series
// bounded by 1 / (2 N).
double lobachevsky_series(double theta) {
    double s = 0;
    for (int n = 1; n <= 2000000; ++n) s += std::sin(2 * n * theta) / (static_cast<double>(n) * n);
    return 0.5 * s;
}

} // namespace

TEST_SUITE("hypvol") {
    TEST_CASE("Lobachevsky function against its Fourier series") {
        for (double theta : {0.1, 0.3, pi / 6, 0.7, pi / 4, 1.0, pi / 3, 1.3, 2.0, 2.9, -0.4})
            CHECK(lobachevsky(theta) == doctest::Approx(lobachevsky_series(theta)).epsilon(1e-6));
    }

    TEST_CASE("Lobachevsky function is odd and pi-periodic") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-10, 10);
        for (int i = 0; i < 1000; ++i) {
            const double t = u(rng);
            CHECK(std::abs(lobachevsky(-t) + lobachevsky(t)) < 1e-12);
            CHECK(std::abs(lobachevsky(t + pi) - lobachevsky(t)) < 1e-11);
        }
        CHECK(std::abs(lobachevsky(0)) < 1e-15);
        CHECK(std::abs(lobachevsky(pi / 2)) < 1e-12);
    }

    TEST_CASE("volume constants") {
        const auto& k = constants();
        CHECK(k.v_tet == doctest::Approx(1.0149416).epsilon(1e-7));
        CHECK(k.v_oct == doctest::Approx(3.6638623).epsilon(1e-7));
        CHECK(k.v_cuboct == doctest::Approx(12.046).epsilon(1e-4));
        CHECK(k.v_tet == doctest::Approx(3 * lobachevsky(pi / 3)).epsilon(1e-12));
        CHECK(k.v_oct == doctest::Approx(8 * lobachevsky(pi / 4)).epsilon(1e-12));
    }

    TEST_CASE("ideal polyhedron oracle reproduces the closed forms") {
        CHECK(ideal_polyhedron_volume(tet_vertices()) == doctest::Approx(constants().v_tet).epsilon(1e-6));
        CHECK(ideal_polyhedron_volume(oct_vertices()) == doctest::Approx(constants().v_oct).epsilon(1e-6));
        const auto cubo = cuboct_vertices();
        const double from0 = ideal_polyhedron_volume(cubo, 0);
        for (int v = 1; v < static_cast<int>(cubo.size()); ++v)
            CHECK(ideal_polyhedron_volume(cubo, v) == doctest::Approx(from0).epsilon(1e-9));
        CHECK(cuboct_volume_oracle() == doctest::Approx(constants().v_cuboct).epsilon(1e-6));
    }

    TEST_CASE("ideal tetrahedron volume") {
        CHECK(ideal_tetra_volume(pi / 3, pi / 3, pi / 3) == doctest::Approx(constants().v_tet).epsilon(1e-12));
        CHECK(ideal_tetra_volume(pi / 2, pi / 4, pi / 4) == doctest::Approx(constants().v_oct / 4).epsilon(1e-12));
        CHECK_THROWS_AS(ideal_tetra_volume(1.0, 1.0, 1.0), Error);
    }

    TEST_CASE("volume coefficients from a census") {
        TypeCensus c;
        c.n1 = 1, c.n2 = 1, c.n3 = 1, c.n4 = 4, c.n5 = 3;
        const VolumeCoefficients v = volume_coefficients(c);
        CHECK(v == VolumeCoefficients{10, 15, 1});
        CHECK(volume_bound(c) == doctest::Approx(77.1534).epsilon(1e-5));
        TypeCensus p1;
        p1.n5 = 1;
        CHECK(volume_bound(p1) == doctest::Approx(constants().v_oct));
        TypeCensus p2;
        p2.n2 = 2;
        CHECK(volume_bound(p2) == doctest::Approx(2 * constants().v_cuboct));
        TypeCensus hopf;
        hopf.others[VertexType::T6_3] = 1;
        CHECK_THROWS_AS(volume_coefficients(hopf), Error);
    }

    TEST_CASE("slope length bound") {
        CHECK_THROWS_AS(fkp_ratio(2 * pi), Error);
        CHECK_THROWS_AS(fkp_ratio(6.0), Error);
        const double r = fkp_ratio(std::sqrt(58.0));
        CHECK(r == doctest::Approx(std::pow(1 - 4 * pi * pi / 58.0, 1.5)).epsilon(1e-12));
        CHECK(fkp_lower_bound(10.0, std::sqrt(58.0)) == doctest::Approx(10.0 * r));
    }
}
