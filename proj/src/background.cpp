#include "instanton/background.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "instanton/errors.hpp"
#include "instanton/quadrature.hpp"
#include "instanton/rootfind.hpp"

namespace instanton {

namespace {

double first_integral_speed(const DoubleWellParams& p, double E, double x) {
    const double w2 = 2.0 * (E + potential(p, x)) / p.mass;
    return std::sqrt(std::fmax(w2, 0.0));
}

} // namespace

KinkPath::KinkPath(DoubleWellParams p, double L, double tau0, int sign)
    : p_(p), L_(L), tau0_(tau0), sign_(sign) {
    p_.validate();
    if (!(L > 0.0)) throw std::domain_error("KinkPath: L must be positive");
}

double KinkPath::position(double tau) const {
    return sign_ * p_.a() * std::tanh(p_.omega * (tau - tau0_) / M_SQRT2);
}

double KinkPath::velocity(double tau) const {
    const double c = std::cosh(p_.omega * (tau - tau0_) / M_SQRT2);
    return sign_ * p_.a() * p_.omega / M_SQRT2 / (c * c);
}

FiniteInstanton::FiniteInstanton(DoubleWellParams p, double E, double L,
                                 double tau0)
    : p_(p), E_(E), L_(L), tau0_(tau0),
      kappa_(0.0), mod_(EllipticModulus::from_m(1.0)),
      phase_rate_(0.0), scale_(0.0) {
    p_.validate();
    if (!(E >= 0.0))
        throw std::domain_error("FiniteInstanton: requires E >= 0");
    if (!(L > 0.0))
        throw std::domain_error("FiniteInstanton: L must be positive");
    const double a = p_.a();
    const double e_red = E / (p_.delta * a * a * a * a);
    kappa_ = 0.5 + 2.0 * e_red;
    // complement 1 - s^2 = (1 - 1/sqrt(2 kappa)) / 2, cancellation-free
    const double r = std::sqrt(1.0 + 4.0 * e_red); // sqrt(2 kappa)
    const double mc = 2.0 * e_red / (r * (r + 1.0));
    mod_ = EllipticModulus::from_complement(mc);
    phase_rate_ = std::sqrt(0.5 * r) * p_.omega; // (kappa/2)^{1/4} w
    scale_ = std::sqrt(r) * a;                   // (2 kappa)^{1/4} a
}

double FiniteInstanton::position(double tau) const {
    return instanton_position_1(*this, tau);
}

double FiniteInstanton::velocity(double tau) const {
    // first integral; branch 1 is monotonically increasing
    return first_integral_speed(p_, E_, position(tau));
}

double instanton_position_1(const FiniteInstanton& f, double tau) {
    const double w = f.phase(tau);
    const EllipticModulus& mod = f.modulus();
    if (mod.degenerate()) return f.amplitude_scale() * std::tanh(w);
    const double K = complete_K(mod);
    if (!(std::fabs(w) < K)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "instanton_position_1: singular point, |phase| = %.6g "
                      ">= K = %.6g",
                      std::fabs(w), K);
        throw singular_point_error(buf);
    }
    const JacobiTriple j = jacobi_sn_cn_dn(w, mod);
    return f.amplitude_scale() * j.sn * j.dn / j.cn;
}

double instanton_position_2(const FiniteInstanton& f, double tau) {
    const double w = f.phase(tau);
    const EllipticModulus& mod = f.modulus();
    if (mod.degenerate()) {
        if (w == 0.0)
            throw singular_point_error(
                "instanton_position_2: pole at phase = 0");
        return -f.amplitude_scale() / std::tanh(w);
    }
    const double K = complete_K(mod);
    if (w == 0.0 || !(std::fabs(w) < K))
        throw singular_point_error(
            "instanton_position_2: singular point (sn vanishes)");
    const JacobiTriple j = jacobi_sn_cn_dn(w, mod);
    return -f.amplitude_scale() * j.cn / (j.sn * j.dn);
}

FiniteInstanton solve_energy_for_size(const DoubleWellParams& p, double L,
                                      double E_max_reduced) {
    p.validate();
    if (!(L > 0.0))
        throw std::domain_error("solve_energy_for_size: L must be positive");
    const double a = p.a();
    const double ea4 = p.delta * a * a * a * a;

    // x(L/2)/a - 1 at reduced energy e; +inf stands for "path already past
    // the boundary (or past its pole) at tau = L/2"
    auto overshoot = [&](double e_red) -> double {
        const FiniteInstanton f(p, e_red * ea4, L);
        const double w = f.phase(0.5 * L);
        if (!f.modulus().degenerate() && w >= complete_K(f.modulus()))
            return HUGE_VAL;
        return instanton_position_1(f, 0.5 * L) / a - 1.0;
    };

    // tail-matching estimate of the boundary energy, e ~ 16 exp(-sqrt2 w L)
    const double e_asym = 16.0 * std::exp(-M_SQRT2 * p.omega * L);
    if (e_asym < 1e-25) {
        // below double-precision resolution of the boundary condition:
        // the background is the kink to machine accuracy
        FiniteInstanton f(p, e_asym * ea4, L);
        f.asymptotic_ = true;
        return f;
    }

    double t_lo = std::log(std::fmax(e_asym * 1e-4, 1e-280));
    double t_hi = std::log(E_max_reduced);
    if (overshoot(std::exp(t_hi)) < 0.0)
        throw no_instanton_error(
            "solve_energy_for_size: no instanton at this size below E_max");
    for (int k = 0; k < 64 && overshoot(std::exp(t_lo)) > 0.0; ++k) {
        t_lo -= 5.0;
        if (t_lo < std::log(1e-290))
            throw no_instanton_error(
                "solve_energy_for_size: bracketing failed");
    }

    double best_t = t_lo;
    double best_g = HUGE_VAL;
    for (int it = 0; it < 200 && t_hi - t_lo > 1e-15; ++it) {
        const double tm = 0.5 * (t_lo + t_hi);
        const double g = overshoot(std::exp(tm));
        if (std::isfinite(g) && std::fabs(g) < std::fabs(best_g)) {
            best_g = g;
            best_t = tm;
        }
        if (g > 0.0)
            t_hi = tm;
        else
            t_lo = tm;
        if (g == 0.0) break;
    }
    return FiniteInstanton(p, std::exp(best_t) * ea4, L);
}

double time_of_position(const DoubleWellParams& p, double E, double x) {
    p.validate();
    if (!(x >= 0.0))
        throw std::domain_error("time_of_position: requires x >= 0");
    if (x == 0.0) return 0.0;
    if (E + potential(p, x) <= 0.0)
        throw std::domain_error(
            "time_of_position: integrand singular, E + V(x) <= 0");
    auto integrand = [&](double xi) {
        return 1.0 / std::sqrt(E + potential(p, xi));
    };
    return std::sqrt(0.5 * p.mass) *
           quad::integrate(integrand, 0.0, x, 1e-12).value;
}

double size_for_energy(const DoubleWellParams& p, double E, int branch) {
    p.validate();
    if (!(E > 0.0))
        throw std::domain_error("size_for_energy: requires E > 0");
    if (branch != 1 && branch != 2)
        throw std::domain_error("size_for_energy: branch must be 1 or 2");
    const double a = p.a();
    // dummy window; only the modulus and rates are used here
    const FiniteInstanton f(p, E, 1.0);
    const EllipticModulus& mod = f.modulus();
    const double K = complete_K(mod);
    const double target = a / f.amplitude_scale();

    double w_hit;
    if (branch == 1) {
        auto g = [&](double w) {
            const JacobiTriple j = jacobi_sn_cn_dn(w, mod);
            return j.sn * j.dn / j.cn - target;
        };
        w_hit = roots::brent(g, 1e-14 * K, K * (1.0 - 1e-12), 1e-15 * K);
    } else {
        auto g = [&](double w) {
            const JacobiTriple j = jacobi_sn_cn_dn(w, mod);
            return j.cn / (j.sn * j.dn) - target;
        };
        const double w2 = roots::brent(g, 1e-14 * K, K * (1.0 - 1e-12),
                                       1e-15 * K);
        w_hit = K - w2; // cn/(sn dn) at w2 equals sn dn/cn at K - w2
    }
    return 2.0 * w_hit / (std::sqrt(0.5 * std::sqrt(2.0 * f.kappa())) *
                          p.omega);
}

double euler_lagrange_residual(const ClassicalPath& path,
                               std::span<const double> grid) {
    const DoubleWellParams& p = path.parameters();
    const double h = 1e-3 / p.omega;
    double worst = 0.0;
    for (double tau : grid) {
        const double x = path.position(tau);
        const double xdd = (path.position(tau + h) - 2.0 * x +
                            path.position(tau - h)) /
                           (h * h);
        worst = std::fmax(worst,
                          std::fabs(p.mass * xdd - d_potential(p, x)));
    }
    return worst;
}

} // namespace instanton
