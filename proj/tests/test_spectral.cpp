// Spectral core: transform conventions, the free propagator, Sigma_delta
// norms. Expected values are closed-form Gaussian integrals under the
// e^{-2pi i x xi} convention.
#include <catch2/catch_amalgamated.hpp>

#include <fraclab/spectral.hpp>

#include "test_support.hpp"

using namespace fraclab;
using testsupport::Rng;

namespace {
const Grid1D kGrid(20.0, 2048);
}

TEST_CASE("forward transform: Gaussian is self-dual") {
    ComplexField f(kGrid);
    for (int j = 0; j < f.size(); ++j) f.samples[j] = std::exp(-M_PI * kGrid.x(j) * kGrid.x(j));
    SpectralField F = forward_transform(f);
    double worst = 0.0;
    for (int k = 0; k < F.size(); ++k) {
        double xi = kGrid.xi(k);
        worst = std::max(worst, std::abs(F.coefficients[k] - cd(std::exp(-M_PI * xi * xi), 0.0)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("forward transform: zero maps to zero") {
    ComplexField f(kGrid);
    SpectralField F = forward_transform(f);
    for (const auto& z : F.coefficients) REQUIRE(std::abs(z) == 0.0);
}

TEST_CASE("forward transform: shifted Gaussian picks up the phase e^{-2pi i xi}") {
    // hat of e^{-pi (x-1)^2} is e^{-2pi i xi} e^{-pi xi^2}; checked at xi = 0.5
    ComplexField f(kGrid);
    for (int j = 0; j < f.size(); ++j) {
        double x = kGrid.x(j);
        f.samples[j] = std::exp(-M_PI * (x - 1.0) * (x - 1.0));
    }
    SpectralField F = forward_transform(f);
    int k = kGrid.n_points / 2 + 20; // xi = 20 * (1/40) = 0.5
    REQUIRE(kGrid.xi(k) == Catch::Approx(0.5).margin(1e-15));
    cd expected = std::exp(cd(0.0, -2.0 * M_PI * 0.5)) * std::exp(-M_PI * 0.25);
    CHECK(std::abs(F.coefficients[k] - expected) < 1e-10);
}

TEST_CASE("inverse transform: round trip and symmetry") {
    Rng rng(11);
    ComplexField f = testsupport::random_field(rng, kGrid);
    ComplexField g = inverse_transform(forward_transform(f));
    double num = 0.0, den = 0.0;
    for (int j = 0; j < f.size(); ++j) {
        num += std::norm(f.samples[j] - g.samples[j]);
        den += std::norm(f.samples[j]);
    }
    CHECK(std::sqrt(num / den) < 1e-12);

    SpectralField zero(kGrid);
    ComplexField z = inverse_transform(zero);
    for (const auto& v : z.samples) REQUIRE(std::abs(v) == 0.0);

    // real even spectrum -> real even field
    SpectralField S(kGrid);
    for (int k = 0; k < S.size(); ++k) {
        double xi = kGrid.xi(k);
        S.coefficients[k] = std::pow(1.0 + xi * xi, -0.55); // <xi>^{-1.1}
    }
    ComplexField h = inverse_transform(S);
    double imax = 0.0;
    for (const auto& v : h.samples) imax = std::max(imax, std::abs(v.imag()));
    CHECK(imax < 1e-12);
}

TEST_CASE("evolve: identity at t=0 and the Gaussian law at t=1") {
    ComplexField fG = gaussian_datum(kGrid);
    ComplexField u0 = evolve(fG, 0.0);
    for (int j = 0; j < fG.size(); ++j) REQUIRE(std::abs(u0.samples[j] - fG.samples[j]) < 1e-13);

    // |u_G(x,1)|^2 = e^{-pi x^2} from u_G = 2^{1/4}(1+it)^{-1/2} e^{-pi x^2/(1+it)}
    ComplexField u1 = evolve(fG, 1.0);
    double worst = 0.0;
    for (int j = 0; j < fG.size(); ++j) {
        double x = kGrid.x(j);
        worst = std::max(worst, std::abs(std::norm(u1.samples[j]) - std::exp(-M_PI * x * x)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("evolve: mass conservation for arbitrary data") {
    Rng rng(5);
    for (int rep = 0; rep < 5; ++rep) {
        ComplexField f = testsupport::random_field(rng, kGrid, false);
        double before = l2_norm(f);
        double after = l2_norm(evolve(f, rng.uniform(-3.0, 3.0)));
        REQUIRE(std::abs(after - before) < 1e-12 * before);
    }
}

TEST_CASE("evolution group law") {
    Rng rng(17);
    ComplexField f = testsupport::random_field(rng, kGrid);
    ComplexField a = evolve(evolve(f, 0.7), 0.55);
    ComplexField b = evolve(f, 1.25);
    double worst = 0.0;
    for (int j = 0; j < f.size(); ++j) worst = std::max(worst, std::abs(a.samples[j] - b.samples[j]));
    CHECK(worst < 1e-10);
}

TEST_CASE("unitarity over 100 random fields") {
    Rng rng(23);
    for (int rep = 0; rep < 100; ++rep) {
        ComplexField f = testsupport::random_field(rng, kGrid, false);
        double r = l2_norm(forward_transform(f)) / l2_norm(f);
        REQUIRE(r == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("fractional derivative norm") {
    ComplexField fG = gaussian_datum(kGrid);
    CHECK(fractional_derivative_norm(fG, 0.0) == Catch::Approx(l2_norm(fG)).margin(1e-13));
    // s=1 Gaussian moment: sqrt(int xi^2 sqrt(2) e^{-2 pi xi^2} dxi) = 1/sqrt(4 pi)
    CHECK(fractional_derivative_norm(fG, 1.0) == Catch::Approx(1.0 / std::sqrt(4.0 * M_PI)).margin(1e-10));
    CHECK_THROWS_AS(fractional_derivative_norm(fG, -0.5), std::invalid_argument);

    // band-limited multiplier bound: fhat supported in |xi| < a gives <= a^s ||f||
    SpectralField S(kGrid);
    const double a = 1.5;
    for (int k = 0; k < S.size(); ++k) {
        double xi = kGrid.xi(k);
        S.coefficients[k] = std::abs(xi) < a ? cd(std::exp(-xi * xi), 0.0) : cd(0, 0);
    }
    ComplexField f = inverse_transform(S);
    for (double s : {0.5, 1.0, 1.7})
        REQUIRE(fractional_derivative_norm(f, s) <= std::pow(a, s) * l2_norm(f) * (1 + 1e-12));
}

TEST_CASE("sigma norms: Gaussian equality constants at delta=1") {
    ComplexField fG = gaussian_datum(kGrid);
    SigmaNorms sn = sigma_norms(fG, DeltaParam(1.0));
    CHECK(sn.x_weighted * sn.x_weighted == Catch::Approx(1.0 / (4.0 * M_PI)).margin(1e-10));
    CHECK(sn.d_delta * sn.d_delta == Catch::Approx(1.0 / (4.0 * M_PI)).margin(1e-10));

    ComplexField z(kGrid);
    SigmaNorms zn = sigma_norms(z, DeltaParam(0.5));
    CHECK(zn.l2 == 0.0);
    CHECK(zn.x_weighted == 0.0);
    CHECK(zn.d_delta == 0.0);
}

TEST_CASE("sigma norms: dilation covariance") {
    // 1e-3 needs the finer dual grid: the |.|^{2 delta} kink error ~ dxi^{1+2d}
    const Grid1D g(80.0, 16384);
    Rng rng(31);
    for (double delta : {0.25, 0.5, 0.75}) {
        auto mix = testsupport::GaussMixture::random(rng);
        ComplexField f = testsupport::sample(mix, g);
        SigmaNorms base = sigma_norms(f, DeltaParam(delta));
        for (double lambda : {0.5, 2.0}) {
            ComplexField fl = testsupport::sample(mix, g, lambda);
            SigmaNorms sn = sigma_norms(fl, DeltaParam(delta));
            CHECK(sn.x_weighted == Catch::Approx(base.x_weighted * std::pow(lambda, -delta)).epsilon(1e-3));
            CHECK(sn.d_delta == Catch::Approx(base.d_delta * std::pow(lambda, delta)).epsilon(1e-3));
        }
    }
}

TEST_CASE("sigma norms: Parseval route for d_delta") {
    Rng rng(37);
    ComplexField f = testsupport::random_field(rng, kGrid);
    const double delta = 0.6;
    SigmaNorms sn = sigma_norms(f, DeltaParam(delta));
    SpectralField F = forward_transform(f);
    for (int k = 0; k < F.size(); ++k)
        F.coefficients[k] *= std::pow(std::abs(kGrid.xi(k)), delta);
    double back = l2_norm(inverse_transform(F));
    CHECK(back == Catch::Approx(sn.d_delta).margin(1e-10));
}

TEST_CASE("gaussian datum") {
    ComplexField fG = gaussian_datum(kGrid);
    CHECK(fG.samples[kGrid.n_points / 2].real() == Catch::Approx(std::pow(2.0, 0.25)).margin(1e-14));
    CHECK(l2_norm(fG) == Catch::Approx(1.0).margin(1e-12));
    SpectralField F = forward_transform(fG);
    double worst = 0.0;
    for (int k = 0; k < F.size(); ++k) {
        double xi = kGrid.xi(k);
        worst = std::max(worst, std::abs(F.coefficients[k] - cd(std::pow(2.0, 0.25) * std::exp(-M_PI * xi * xi), 0.0)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("tail mass flags leaky data") {
    ComplexField fG = gaussian_datum(kGrid);
    CHECK(tail_mass(fG) < 1e-10);
    ComplexField wide(kGrid);
    for (int j = 0; j < wide.size(); ++j)
        wide.samples[j] = std::exp(-0.005 * kGrid.x(j) * kGrid.x(j));
    CHECK(tail_mass(wide) > 1e-3);
}

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(Grid1D(-1.0, 64), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(1.0, 63), std::invalid_argument);
    CHECK_THROWS_AS(DeltaParam(0.0), std::invalid_argument);
    CHECK_THROWS_AS(DeltaParam(1.5), std::invalid_argument);
    Grid1D g(20.0, 2048);
    CHECK(g.dx() * g.dxi() * g.n_points == Catch::Approx(1.0).margin(1e-15));
    CHECK_THROWS_AS(ComplexField(g, std::vector<cd>(5)), std::invalid_argument);
}
