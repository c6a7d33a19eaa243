#include <doctest.h>

#include <cmath>
#include <numeric>

#include "instanton/background.hpp"
#include "instanton/fluctuation.hpp"

using namespace instanton;

namespace {
const DoubleWellParams unit{};
}

TEST_CASE("stability operator potentials") {
    KinkPath k(unit, 20.0);
    const StabilityOperator op = build_stability_operator(k);
    CHECK(op.half_window == 10.0);
    // U = 2 w^2 (1 - 3/2 sech^2(w tau / sqrt2)) for the kink
    for (double tau : {-3.0, 0.0, 0.5, 2.0}) {
        const double sech = 1.0 / std::cosh(tau / M_SQRT2);
        CHECK(op.U(tau) ==
              doctest::Approx(2.0 * (1.0 - 1.5 * sech * sech))
                  .epsilon(1e-13));
    }
    const StabilityOperator harm = harmonic_operator(0.9, 8.0);
    CHECK(harm.U(1.234) == doctest::Approx(0.81).epsilon(1e-15));
    CHECK(harm.half_window == 4.0);
}

TEST_CASE("harmonic grid eigenvalues match the discrete closed form") {
    const double omega = 1.3, L = 6.0;
    const int n = 64;
    const StabilityOperator harm = harmonic_operator(omega, L);
    const SpectrumResult s = spectrum_finite_difference(harm, n);
    CHECK_FALSE(s.accuracy_warning);
    CHECK_FALSE(s.extrapolated);
    const double h = L / (n + 1);
    CHECK(s.grid_spacing == doctest::Approx(h).epsilon(1e-15));
    REQUIRE(s.eigenvalues.size() == static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const double lam =
            2.0 / (h * h) * (1.0 - std::cos(k * M_PI / (n + 1))) +
            omega * omega;
        CHECK(s.eigenvalues[k - 1] == doctest::Approx(lam).epsilon(1e-12));
    }
    CHECK(spectrum_finite_difference(harm, 32).accuracy_warning);
}

TEST_CASE("richardson extrapolation sharpens the harmonic spectrum") {
    const double omega = 1.0, L = 10.0;
    const StabilityOperator harm = harmonic_operator(omega, L);
    const SpectrumResult plain = spectrum_finite_difference(harm, 256);
    const SpectrumResult rich = spectrum_finite_difference(harm, 256, true);
    CHECK(rich.extrapolated);
    for (int k = 1; k <= 5; ++k) {
        const double exact =
            std::pow(k * M_PI / L, 2) + omega * omega; // continuum Dirichlet
        CHECK(std::fabs(rich.eigenvalues[k - 1] - exact) <
              0.01 * std::fabs(plain.eigenvalues[k - 1] - exact));
    }
}

TEST_CASE("gelfand-yaglom closed forms for the harmonic operator") {
    const double omega = 1.1, L = 7.0;
    const StabilityOperator harm = harmonic_operator(omega, L);
    CHECK(gelfand_yaglom_solution(harm) ==
          doctest::Approx(std::sinh(omega * L) / omega).epsilon(1e-9));
    // below the well bottom
    const double lam1 = 0.5 * omega * omega;
    const double q1 = std::sqrt(omega * omega - lam1);
    CHECK(gelfand_yaglom_shifted(harm, lam1) ==
          doctest::Approx(std::sinh(q1 * L) / q1).epsilon(1e-9));
    // above: oscillatory branch
    const double lam2 = 2.0 * omega * omega;
    const double q2 = std::sqrt(lam2 - omega * omega);
    CHECK(gelfand_yaglom_shifted(harm, lam2) ==
          doctest::Approx(std::sin(q2 * L) / q2).epsilon(1e-8));
}

TEST_CASE("closed-form normalized harmonic determinant") {
    CHECK(harmonic_determinant(1.0, 2.0) ==
          doctest::Approx(-4.0 * std::pow(std::sinh(1.0), 2))
              .epsilon(1e-15));
    CHECK_THROWS_AS(harmonic_determinant(1.0, 0.0), std::domain_error);
}

TEST_CASE("kink bound states and ground mode shape") {
    KinkPath k(unit, 20.0);
    const StabilityOperator op = build_stability_operator(k);
    const SpectrumResult s = spectrum_finite_difference(op, 2048, true);
    CHECK(std::fabs(s.eigenvalues[0]) < 1e-3); // zero mode
    // eps1 = (3/4) wwell^2 with wwell^2 = V''(a)/M = 2
    CHECK(s.eigenvalues[1] == doctest::Approx(1.5).epsilon(5e-3));
    CHECK(s.eigenvalues[2] > 1.9); // continuum edge at wwell^2 = 2

    // grid ground mode overlaps the analytic Goldstone profile
    const int n = 1024;
    const std::vector<double> g = ground_mode_grid(op, n);
    auto eta = zero_mode_profile(k);
    const double h = 20.0 / (n + 1);
    std::vector<double> sampled(n);
    for (int i = 0; i < n; ++i) sampled[i] = eta(-10.0 + (i + 1) * h);
    const double norm = std::sqrt(
        std::inner_product(sampled.begin(), sampled.end(), sampled.begin(),
                           0.0));
    double overlap = 0.0;
    for (int i = 0; i < n; ++i) overlap += g[i] * sampled[i] / norm;
    CHECK(std::fabs(overlap) > 0.999);
}

TEST_CASE("velocity profile annihilated by the stability operator") {
    KinkPath k(unit, 20.0);
    const StabilityOperator op = build_stability_operator(k);
    auto eta = [&](double tau) { return k.velocity(tau); };
    const double h = 1e-3;
    for (double tau : {-2.0, -0.4, 0.9, 3.0}) {
        const double lap =
            (eta(tau + h) - 2.0 * eta(tau) + eta(tau - h)) / (h * h);
        CHECK(std::fabs(-lap + op.U(tau) * eta(tau)) < 1e-4);
    }
}

TEST_CASE("high modes of kink and harmonic operators converge") {
    KinkPath k(unit, 20.0);
    const StabilityOperator op = build_stability_operator(k);
    const StabilityOperator harm = harmonic_operator(M_SQRT2, 20.0);
    const SpectrumResult mu = spectrum_finite_difference(op, 512, true);
    const SpectrumResult nu = spectrum_finite_difference(harm, 512, true);
    for (int kk : {100, 200, 300}) {
        CHECK(mu.eigenvalues[kk] < nu.eigenvalues[kk]); // attractive well
        CHECK(std::fabs(mu.eigenvalues[kk] - nu.eigenvalues[kk]) < 1.0);
        CHECK(std::fabs(mu.eigenvalues[kk] / nu.eigenvalues[kk] - 1.0) <
              0.01);
    }
}

TEST_CASE("regularized ratio: both routes near 12 wwell^2 for a wide kink") {
    // the reference operator carries the well curvature frequency sqrt2,
    // so the asymptotic ratio is 12 wwell^2 = 24
    const double ww = M_SQRT2;
    KinkPath k(unit, 20.0);
    const StabilityOperator op = build_stability_operator(k);
    const DeterminantRatio spec =
        regularized_ratio(op, ww, 20.0, DetMethod::spectral, 2048);
    const DeterminantRatio gy =
        regularized_ratio(op, ww, 20.0, DetMethod::gelfand_yaglom);
    CHECK(spec.method == DetMethod::spectral);
    CHECK(gy.method == DetMethod::gelfand_yaglom);
    CHECK(spec.ratio == doctest::Approx(24.0).epsilon(0.02));
    CHECK(gy.ratio == doctest::Approx(24.0).epsilon(0.02));
    CHECK(spec.harmonic_det ==
          doctest::Approx(harmonic_determinant(ww, 20.0)).epsilon(1e-15));
    CHECK(spec.regularized_det ==
          doctest::Approx(std::fabs(spec.harmonic_det) / spec.ratio)
              .epsilon(1e-14));

    double gy_val = 0.0;
    const DeterminantRatio both =
        regularized_ratio_checked(op, ww, 20.0, 2048, 0.02, &gy_val);
    CHECK(both.method == DetMethod::spectral);
    CHECK(gy_val == doctest::Approx(gy.ratio).epsilon(1e-12));
}
