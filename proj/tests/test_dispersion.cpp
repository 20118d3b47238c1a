// Dispersion functional: the three routes agree, the Gaussian law holds, and
// the constants b_{n,delta} match across their two published forms.
#include <catch2/catch_amalgamated.hpp>

#include <fraclab/dispersion.hpp>
#include <fraclab/regularity.hpp>

#include "test_support.hpp"

using namespace fraclab;
using testsupport::Rng;

namespace {
const Grid1D kGrid(20.0, 2048);
const Grid1D kGridFast(20.0, 1024);
}

TEST_CASE("b constants: closed-form check at delta = 1/2") {
    // Gamma(1) = 1, |Gamma(-1/2)| = 2 sqrt(pi) give b = 1/(4 pi^2)
    CHECK(b_constant(1, DeltaParam(0.5)) == Catch::Approx(1.0 / (4.0 * M_PI * M_PI)).margin(1e-14));
    CHECK(b1_constant(DeltaParam(0.5)) == Catch::Approx(1.0 / (4.0 * M_PI * M_PI)).margin(1e-14));
}

TEST_CASE("b constants: Legendre duplication ties the two forms") {
    for (int i = 1; i <= 99; ++i) {
        DeltaParam d(i / 100.0);
        REQUIRE(b1_constant(d) == Catch::Approx(b_constant(1, d)).margin(1e-12));
    }
}

TEST_CASE("b constants: small-delta limit and domain") {
    CHECK(b_constant(1, DeltaParam(1e-3)) < 1e-3); // |Gamma(-delta)| ~ 1/delta blows up
    CHECK(b_constant(1, DeltaParam(1e-3)) < b_constant(1, DeltaParam(0.1)));
    CHECK_THROWS_AS(b_constant(1, DeltaParam(1.0)), std::domain_error);
    CHECK_THROWS_AS(b1_constant(DeltaParam(1.0)), std::domain_error);
}

TEST_CASE("h_direct: Gaussian values") {
    ComplexField fG = gaussian_datum(kGrid);
    CHECK(h_direct(fG, DeltaParam(1.0), 0.0).value == Catch::Approx(1.0 / (4.0 * M_PI)).margin(1e-10));

    DeltaParam d(0.5);
    double h0 = h_direct(fG, d, 0.0).value;
    // plain Riemann feels the |x|^{2 delta} kink at order dx^{1+2d} ~ 4e-4
    CHECK(h_direct(fG, d, 2.0).value == Catch::Approx(h0 * std::sqrt(5.0)).epsilon(1e-3));
    double h0c = h_direct(fG, d, 0.0, true).value;
    CHECK(h_direct(fG, d, 2.0, true).value == Catch::Approx(h0c * std::sqrt(5.0)).epsilon(1e-6));
    // exact h(0) for the Gaussian at delta = 1/2: sqrt(2)/(2 pi)
    CHECK(h0c == Catch::Approx(std::sqrt(2.0) / (2.0 * M_PI)).epsilon(1e-7));

    Rng rng(3);
    for (int rep = 0; rep < 4; ++rep) {
        ComplexField f = testsupport::random_field(rng, kGrid);
        REQUIRE(h_direct(f, DeltaParam(rng.uniform(0.1, 1.0)), rng.uniform(-2, 2)).value >= 0.0);
    }
}

TEST_CASE("h_direct: tail-mass failure flags, not throws") {
    ComplexField fG = gaussian_datum(kGrid);
    Flagged far = h_direct(fG, DeltaParam(0.5), 40.0); // solution spread far past L/2
    CHECK_FALSE(far.ok);
    CHECK(far.tail_mass > 1e-6);
    CHECK(h_direct(fG, DeltaParam(0.5), 0.5).ok);
}

TEST_CASE("h_large_t: Gaussian law and limits") {
    ComplexField fG = gaussian_datum(kGrid);
    DeltaParam d(0.5);
    double h0 = h_direct(fG, d, 0.0).value;
    CHECK(h_large_t(fG, d, 10.0) == Catch::Approx(h0 * std::sqrt(101.0)).epsilon(1e-4));
    CHECK_THROWS_AS(h_large_t(fG, d, 0.0), std::domain_error);

    // h(t)/t^{2 delta} -> ||D^delta f||^2, Cauchy difference between t=50,100
    double nd = fractional_derivative_norm(fG, d);
    double r50 = h_large_t(fG, d, 50.0) / std::pow(50.0, 2.0 * d);
    double r100 = h_large_t(fG, d, 100.0) / std::pow(100.0, 2.0 * d);
    CHECK(std::abs(r50 - r100) < 1e-3);
    CHECK(r100 == Catch::Approx(nd * nd).epsilon(2e-3));
}

TEST_CASE("h_large_t agrees with h_direct at t=1") {
    Rng rng(7);
    for (int rep = 0; rep < 5; ++rep) {
        ComplexField f = testsupport::random_field(rng, kGrid);
        DeltaParam d(rng.uniform(0.2, 0.9));
        double a = h_direct(f, d, 1.0).value;
        double b = h_large_t(f, d, 1.0);
        REQUIRE(std::abs(a - b) / a < 1e-4);
    }
}

TEST_CASE("h_seminorm: Gaussian cross-route and symmetries") {
    ComplexField fG = gaussian_datum(kGrid);
    DeltaParam d(0.5);
    double direct = h_direct(fG, d, 0.0).value;
    double semi = h_seminorm(fG, d, 0.0);
    CHECK(std::abs(semi - direct) / direct < 0.01);

    // real data: even in t
    CHECK(h_seminorm(fG, d, 0.75) == Catch::Approx(h_seminorm(fG, d, -0.75)).margin(1e-10));

    ComplexField zero(kGrid);
    CHECK(h_seminorm(zero, d, 1.0) == 0.0);
}

TEST_CASE("route agreement: direct / large_t / seminorm within 1%") {
    Rng rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        ComplexField f = testsupport::random_field(rng, kGridFast);
        for (double delta : {0.25, 0.5, 0.75}) {
            DeltaParam d(delta);
            for (double t : {0.5, 1.0, 2.0}) {
                double a = h_direct(f, d, t).value;
                double b = h_large_t(f, d, t);
                double c = h_seminorm(f, d, t);
                REQUIRE(std::abs(b - a) / a < 0.01);
                REQUIRE(std::abs(c - a) / a < 0.01);
            }
        }
    }
}

TEST_CASE("evenness of h for real data") {
    Rng rng(19);
    ComplexField f = testsupport::random_field(rng, kGrid);
    DeltaParam d(0.4);
    for (double t : {0.3, 1.1, 2.4}) {
        double plus = h_direct(f, d, t).value;
        double minus = h_direct(f, d, -t).value;
        REQUIRE(std::abs(plus - minus) < 1e-10 * std::max(1.0, plus));
    }
}

TEST_CASE("gaussian_reference") {
    CHECK(gaussian_reference(DeltaParam(0.3), 0.0, 2.5) == 2.5);
    CHECK(gaussian_reference(DeltaParam(1.0), 1.0, 1.0 / (4 * M_PI)) ==
          Catch::Approx(1.0 / (2 * M_PI)).margin(1e-15));
    CHECK(gaussian_reference(DeltaParam(0.5), std::sqrt(3.0), 2.0) == Catch::Approx(4.0).margin(1e-12));
    CHECK_THROWS_AS(gaussian_reference(DeltaParam(0.5), 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("dynamical bounds: Gaussian saturates delta=1, random data has slack") {
    ComplexField fG = gaussian_datum(kGrid);
    std::vector<double> ts{0.5, 1.0, 2.0, 3.0};
    // a_1^2 = 1/(4 pi): the classical Heisenberg constant
    BoundsReport rg = check_dynamical_bounds(fG, DeltaParam(1.0), std::sqrt(1.0 / (4.0 * M_PI)), ts);
    for (const auto& row : rg.rows) {
        REQUIRE(std::abs(row.margin_two_time) < 1e-8);
        REQUIRE(row.margin_pointwise > -1e-8);
    }

    Rng rng(29);
    DeltaParam d(0.5);
    // any valid lower-bound constant keeps margins nonnegative; use a small one
    for (int rep = 0; rep < 3; ++rep) {
        ComplexField f = testsupport::random_field(rng, kGrid);
        BoundsReport r = check_dynamical_bounds(f, d, 0.3, ts);
        REQUIRE(r.worst_margin >= -1e-6);
    }

    ComplexField big = fG;
    for (auto& z : big.samples) z *= 2.0;
    CHECK_THROWS_AS(check_dynamical_bounds(big, d, 0.3, ts), std::invalid_argument);
}

TEST_CASE("nahas-ponce ratio") {
    ComplexField fG = gaussian_datum(kGrid);
    std::vector<double> ts;
    for (double t = 0.0; t <= 4.0; t += 0.25) ts.push_back(t);
    CHECK(nahas_ponce_ratio(fG, DeltaParam(1.0), ts) == Catch::Approx(0.5).margin(1e-8));
    ComplexField zero(kGrid);
    CHECK(nahas_ponce_ratio(zero, DeltaParam(0.5), ts) == 0.0);
}
