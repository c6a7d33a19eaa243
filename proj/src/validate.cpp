#include "instanton/validate.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "instanton/action.hpp"
#include "instanton/background.hpp"
#include "instanton/elliptic.hpp"
#include "instanton/fluctuation.hpp"
#include "instanton/propagator.hpp"

namespace instanton {

namespace {

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

CheckResult check_kink_action(const DoubleWellParams& p) {
    const double L = 40.0 / p.omega;
    const KinkPath kink(p, L);
    const double A = classical_action(kink, L);
    const double A_inf = asymptotic_action(p);
    const double rel = std::fabs(A / A_inf - 1.0);
    return {"kink action at wL=40 vs (2 sqrt2/3) M^2 w^3/delta",
            rel < 1e-6, fmt("A = %.12g, exact = %.12g, rel = %.3e", A, A_inf, rel)};
}

CheckResult check_bound_states(const DoubleWellParams& p) {
    // anchors are stated in units of the well curvature frequency
    // w_well = sqrt(V''(a)/M) = sqrt2 w, the "omega" of the harmonic
    // wells entering the fluctuation formulas
    const double ww2 = std::pow(p.well_frequency(), 2);
    const double L = 30.0 / p.omega;
    const KinkPath kink(p, L);
    const SpectrumResult sp = spectrum_finite_difference(
        build_stability_operator(kink), 4096, true);
    const double e0 = sp.eigenvalues[0] / ww2;
    const double e1 = sp.eigenvalues[1] / ww2;
    const bool ok = std::fabs(e0) < 1e-3 && std::fabs(e1 - 0.75) <= 0.01;
    return {"kink bound states: |eps0| < 1e-3 wwell^2, eps1 = 0.75 wwell^2 "
            "+- 0.01",
            ok, fmt("eps0/wwell^2 = %.3e, eps1/wwell^2 = %.6f", e0, e1)};
}

CheckResult check_det_ratio_limit(const DoubleWellParams& p) {
    const double ww = p.well_frequency();
    const double L = 30.0 / p.omega;
    const KinkPath kink(p, L);
    const StabilityOperator op = build_stability_operator(kink);
    const DeterminantRatio spec =
        regularized_ratio(op, ww, L, DetMethod::spectral);
    const DeterminantRatio gy =
        regularized_ratio(op, ww, L, DetMethod::gelfand_yaglom);
    const double target = 12.0 * ww * ww;
    const double ds = std::fabs(spec.ratio / target - 1.0);
    const double dg = std::fabs(gy.ratio / target - 1.0);
    const double mutual = std::fabs(spec.ratio / gy.ratio - 1.0);
    const bool ok = ds < 0.01 && dg < 0.01 && mutual < 0.02;
    return {"determinant ratio -> 12 wwell^2 at wL=30 (both methods, "
            "mutual 2%)",
            ok,
            fmt("spectral/target - 1 = %.3e, GY/target - 1 = %.3e, "
                "mutual = %.3e",
                ds, dg, mutual)};
}

CheckResult check_harmonic_determinant(const DoubleWellParams& p) {
    const double L = 30.0 / p.omega;
    // grid determinant of -d^2 + w^2 over the free one, times the free
    // continuum determinant L, against the Gelfand-Yaglom closed form
    auto grid_logdet = [&](double omega, int n) {
        const StabilityOperator op = harmonic_operator(omega, L);
        const SpectrumResult sp = spectrum_finite_difference(op, n);
        double s = 0.0;
        for (double ev : sp.eigenvalues) s += std::log(ev);
        return s;
    };
    auto ratio_at = [&](int n) {
        return grid_logdet(p.omega, n) - grid_logdet(0.0, n);
    };
    const int nc = 2048, nf = 4096;
    const double h1 = L / (nc + 1), h2 = L / (nf + 1);
    const double s1 = ratio_at(nc), s2 = ratio_at(nf);
    const double s = (h1 * h1 * s2 - h2 * h2 * s1) / (h1 * h1 - h2 * h2);
    const double det_grid = L * std::exp(s);
    const double det_gy =
        gelfand_yaglom_solution(harmonic_operator(p.omega, L));
    const double closed = std::sinh(p.omega * L) / p.omega;
    const double rel_grid = std::fabs(det_grid / closed - 1.0);
    const double rel_gy = std::fabs(det_gy / closed - 1.0);
    const double closed_form = harmonic_determinant(p.omega, 2.0 / p.omega);
    const double closed_exact =
        -4.0 * std::sinh(1.0) * std::sinh(1.0);
    const bool ok =
        rel_grid < 0.005 && rel_gy < 1e-8 && closed_form == closed_exact;
    return {"harmonic determinant: grid/IVP vs sinh(wL)/w, closed form "
            "-4 sinh^2(wL/2) exact",
            ok, fmt("grid rel = %.3e, IVP rel = %.3e", rel_grid, rel_gy)};
}

CheckResult check_elliptic_limits(const DoubleWellParams& p) {
    const double a = p.a();
    // background at E = 1e-10 vs the kink over |w tau| <= 10
    const double window = 21.0 / p.omega;
    const FiniteInstanton f(p, 1e-10 * p.delta * a * a * a * a, window);
    double sup = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        const double tau = (-10.0 + 0.01 * i) / p.omega;
        const double x = instanton_position_1(f, tau);
        const double kink = a * std::tanh(p.omega * tau / M_SQRT2);
        sup = std::fmax(sup, std::fabs(x - kink));
    }
    // Jacobi identities over random samples
    std::mt19937 rng(20260823);
    std::uniform_real_distribution<double> um(0.0, 1.0), uu(-8.0, 8.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const EllipticModulus mod = EllipticModulus::from_m(um(rng));
        const JacobiTriple j = jacobi_sn_cn_dn(uu(rng), mod);
        worst = std::fmax(worst,
                          std::fabs(j.sn * j.sn + j.cn * j.cn - 1.0));
        worst = std::fmax(
            worst, std::fabs(j.dn * j.dn + mod.m() * j.sn * j.sn - 1.0));
    }
    const bool ok = sup < 1e-4 * a && worst < 1e-12;
    return {"elliptic limit recovery and Jacobi identities",
            ok, fmt("sup|x - kink|/a = %.3e, worst identity = %.3e",
                    sup / a, worst)};
}

CheckResult check_residuals(const DoubleWellParams& p) {
    double worst_el = 0.0, worst_fi = 0.0;
    const double e_scale = p.barrier_height();
    for (double wl : {10.0, 15.0, 20.0}) {
        const double L = wl / p.omega;
        const FiniteInstanton f = solve_energy_for_size(p, L);
        std::vector<double> grid;
        const double margin = 0.02 / p.omega;
        for (int i = 0; i <= 400; ++i)
            grid.push_back(-0.5 * L + margin +
                           i * (L - 2.0 * margin) / 400.0);
        worst_el = std::fmax(worst_el, euler_lagrange_residual(f, grid));
        // first integral with velocity from a five-point derivative
        const double h = 0.01 / p.omega;
        for (double tau : grid) {
            const double v =
                (-f.position(tau + 2 * h) + 8.0 * f.position(tau + h) -
                 8.0 * f.position(tau - h) + f.position(tau - 2 * h)) /
                (12.0 * h);
            const double lhs = 0.5 * p.mass * v * v -
                               potential(p, f.position(tau));
            worst_fi = std::fmax(
                worst_fi, std::fabs(lhs - f.energy()) /
                              (e_scale + f.energy()));
        }
    }
    const bool ok = worst_el < 1e-4 && worst_fi < 1e-8;
    return {"Euler-Lagrange and first-integral residuals (wL = 10, 15, 20)",
            ok, fmt("max |M xdd - V'| = %.3e, first-integral rel = %.3e",
                    worst_el, worst_fi)};
}

CheckResult check_boundary_solver(const DoubleWellParams& p) {
    const double a = p.a();
    double worst_bc = 0.0;
    bool monotone = true;
    bool contained = true;
    double prev_E = HUGE_VAL;
    for (double wl : {8.0, 10.0, 12.0, 14.0, 16.0, 18.0}) {
        const double L = wl / p.omega;
        const FiniteInstanton f = solve_energy_for_size(p, L);
        worst_bc = std::fmax(
            worst_bc,
            std::fabs(instanton_position_1(f, 0.5 * L) - a) / a);
        if (!(f.energy() < prev_E)) monotone = false;
        prev_E = f.energy();
        const double wstar = f.phase(0.5 * L);
        if (!(wstar / complete_K(f.modulus()) < 1.0)) contained = false;
    }
    // both branches meet the boundary condition at the same size
    double worst_branch = 0.0;
    const double ea4 = p.delta * a * a * a * a;
    for (double e : {0.01, 0.05, 0.2}) {
        const double L1 = size_for_energy(p, e * ea4, 1);
        const double L2 = size_for_energy(p, e * ea4, 2);
        worst_branch = std::fmax(worst_branch, std::fabs(L1 - L2) / L1);
    }
    const bool ok =
        worst_bc < 1e-10 && monotone && contained && worst_branch < 1e-8;
    return {"boundary solver: BC 1e-10 a, E(L) decreasing, phase/K < 1, "
            "branch sizes equal",
            ok,
            fmt("max BC residual/a = %.3e, max |L1 - L2|/L = %.3e",
                worst_bc, worst_branch)};
}

CheckResult check_finite_infinite(const DoubleWellParams& p) {
    const double om_inf = omega_infinity(p);
    // reduced units: A = 2 sqrt2/3, w_well = sqrt2
    const double desk =
        std::exp(-2.0 * M_SQRT2 / 3.0) * 2.0 * std::sqrt(3.0) * M_SQRT2 *
        std::sqrt((2.0 * M_SQRT2 / 3.0) / (2.0 * M_PI));
    // desk arithmetic valid only in reduced units
    const double rel_desk = std::fabs(om_inf - desk);
    const double d30 =
        std::fabs(amplitude_finite(p, 30.0 / p.omega).omega_tunnel /
                      om_inf - 1.0);
    const double d40 =
        std::fabs(amplitude_finite(p, 40.0 / p.omega).omega_tunnel /
                      om_inf - 1.0);
    const bool ok = rel_desk < 1e-10 && d30 < 0.01 && d40 <= d30;
    return {"Omega(L) -> Omega_inf within 1% at wL=30, monotone; desk "
            "recomputation to 1e-10",
            ok,
            fmt("|Omega(30)/Ominf - 1| = %.3e, |Omega(40)/Ominf - 1| = "
                "%.3e, desk diff = %.3e",
                d30, d40, rel_desk)};
}

} // namespace

std::vector<CheckResult> run_acceptance_checks() {
    const DoubleWellParams p; // reduced units
    return {
        check_kink_action(p),        check_bound_states(p),
        check_det_ratio_limit(p),    check_harmonic_determinant(p),
        check_elliptic_limits(p),    check_residuals(p),
        check_boundary_solver(p),    check_finite_infinite(p),
    };
}

} // namespace instanton
