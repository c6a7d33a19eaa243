#include <doctest.h>

#include <cmath>
#include <vector>

#include "instanton/action.hpp"
#include "instanton/background.hpp"
#include "instanton/errors.hpp"
#include "oracles.hpp"

using namespace instanton;

namespace {
const DoubleWellParams unit{}; // M = omega = delta = hbar = 1, a = 1
}

TEST_CASE("kink path basics") {
    KinkPath k(unit, 20.0);
    CHECK(k.position(0.0) == 0.0);
    CHECK(k.position(1e3) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(k.position(-1e3) == doctest::Approx(-1.0).epsilon(1e-14));
    // velocity is the derivative of position
    const double h = 1e-6;
    for (double tau : {-2.0, 0.0, 0.7, 3.1}) {
        const double fd = (k.position(tau + h) - k.position(tau - h)) /
                          (2.0 * h);
        CHECK(k.velocity(tau) == doctest::Approx(fd).epsilon(1e-8));
    }
    // first integral at E = 0: M xdot^2 / 2 = V(x)
    for (double tau : {-1.5, 0.3, 2.0}) {
        const double v = k.velocity(tau);
        CHECK(0.5 * v * v ==
              doctest::Approx(potential(unit, k.position(tau)))
                  .epsilon(1e-12));
    }
    KinkPath anti(unit, 20.0, 0.5, -1);
    CHECK(anti.position(0.5) == 0.0);
    CHECK(anti.position(1e3) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("finite instanton parameterization") {
    const double E = 0.05;
    FiniteInstanton f(unit, E, 12.0);
    CHECK(f.kappa() == doctest::Approx(0.5 + 2.0 * E).epsilon(1e-15));
    const double r = std::sqrt(2.0 * f.kappa());
    CHECK(f.modulus().complement() ==
          doctest::Approx(0.5 * (1.0 - 1.0 / r)).epsilon(1e-12));
    CHECK(f.amplitude_scale() == doctest::Approx(std::sqrt(r)).epsilon(1e-15));
    CHECK(f.position(0.0) == 0.0);
    CHECK_THROWS_AS(FiniteInstanton(unit, -0.1, 12.0), std::domain_error);
}

TEST_CASE("canonical branch against an independent ODE oracle") {
    const double E = 0.05;
    FiniteInstanton f(unit, E, 12.0);
    // integrate M xdd = V'(x) from the center with the first-integral speed
    auto accel = [&](double x) { return d_potential(unit, x); };
    const double v0 = std::sqrt(2.0 * (E + potential(unit, 0.0)));
    for (double t : {0.5, 1.0, 1.5, 2.0}) {
        const double x_ode = oracle::rk4_second_order(accel, 0.0, v0, t,
                                                      20000);
        CHECK(instanton_position_1(f, t) ==
              doctest::Approx(x_ode).epsilon(1e-9));
    }
    // oddness
    CHECK(instanton_position_1(f, -1.3) ==
          doctest::Approx(-instanton_position_1(f, 1.3)).epsilon(1e-13));
}

TEST_CASE("branch product identity and second branch") {
    FiniteInstanton f(unit, 0.2, 10.0);
    const double prod_expected =
        -std::sqrt(2.0 * f.kappa()); // -(2 kappa)^{1/2} a^2
    for (double tau : {0.3, 0.8, 1.4}) {
        CHECK(instanton_position_1(f, tau) * instanton_position_2(f, tau) ==
              doctest::Approx(prod_expected).epsilon(1e-12));
    }
    CHECK_THROWS_AS(instanton_position_2(f, 0.0), singular_point_error);
    // past the pole of branch 1
    const double tau_pole = complete_K(f.modulus()) / f.phase(1.0);
    CHECK_THROWS_AS(instanton_position_1(f, 1.01 * tau_pole),
                    singular_point_error);
}

TEST_CASE("second branch degenerates to -a coth") {
    FiniteInstanton f(unit, 1e-14, 10.0);
    for (double tau : {0.5, 1.0, 2.0}) {
        const double w = tau / M_SQRT2;
        CHECK(instanton_position_2(f, tau) ==
              doctest::Approx(-1.0 / std::tanh(w)).epsilon(1e-6));
    }
}

TEST_CASE("time_of_position inverts the canonical branch") {
    const double E = 0.1;
    FiniteInstanton f(unit, E, 10.0);
    for (double tau : {0.4, 0.9, 1.6}) {
        const double x = instanton_position_1(f, tau);
        CHECK(time_of_position(unit, E, x) ==
              doctest::Approx(tau).epsilon(1e-8));
    }
    CHECK(time_of_position(unit, E, 0.0) == 0.0);
    CHECK_THROWS_AS(time_of_position(unit, E, -0.5), std::domain_error);
}

TEST_CASE("boundary solver") {
    // quadrature cross-check: the solved background reaches x = a at L/2
    FiniteInstanton f10 = solve_energy_for_size(unit, 10.0);
    CHECK_FALSE(f10.asymptotic());
    CHECK(time_of_position(unit, f10.energy(), 1.0) ==
          doctest::Approx(5.0).epsilon(1e-6));

    // E(L) decreases with L
    double prev = HUGE_VAL;
    for (double L : {8.0, 10.0, 12.0, 14.0}) {
        const double E = solve_energy_for_size(unit, L).energy();
        CHECK(E < prev);
        CHECK(E > 0.0);
        prev = E;
    }

    // large window: matches the kink in the interior
    FiniteInstanton f40 = solve_energy_for_size(unit, 40.0);
    KinkPath k(unit, 40.0);
    double worst = 0.0;
    for (double tau = -10.0; tau <= 10.0; tau += 0.5)
        worst = std::fmax(worst,
                          std::fabs(f40.position(tau) - k.position(tau)));
    CHECK(worst < 1e-6);

    // unreachable energy cap
    CHECK_THROWS_AS(solve_energy_for_size(unit, 8.0, 1e-8),
                    no_instanton_error);
}

TEST_CASE("asymptotic fallback at very large L") {
    FiniteInstanton f = solve_energy_for_size(unit, 60.0);
    CHECK(f.asymptotic());
    CHECK(f.energy() ==
          doctest::Approx(16.0 * std::exp(-M_SQRT2 * 60.0)).epsilon(1e-12));
}

TEST_CASE("both branches report the same window for a given energy") {
    for (double E : {0.02, 0.1, 0.3}) {
        CHECK(size_for_energy(unit, E, 1) ==
              doctest::Approx(size_for_energy(unit, E, 2)).epsilon(1e-10));
    }
    CHECK_THROWS_AS(size_for_energy(unit, 0.1, 3), std::domain_error);
    // consistency with the boundary solver
    const FiniteInstanton f = solve_energy_for_size(unit, 12.0);
    CHECK(size_for_energy(unit, f.energy(), 1) ==
          doctest::Approx(12.0).epsilon(1e-6));
}

TEST_CASE("euler-lagrange residual") {
    std::vector<double> grid;
    for (double tau = -4.0; tau <= 4.0; tau += 0.25) grid.push_back(tau);
    KinkPath k(unit, 20.0);
    CHECK(euler_lagrange_residual(k, grid) < 1e-6);
    FiniteInstanton f = solve_energy_for_size(unit, 12.0);
    CHECK(euler_lagrange_residual(f, grid) < 1e-4);
}
