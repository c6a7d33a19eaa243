#include "instanton/elliptic.hpp"

#include <cmath>

namespace instanton {

namespace {

constexpr double kEps = 1e-15;

// Carlson symmetric integral R_F(x, y, z), duplication algorithm.
double carlson_rf(double x, double y, double z) {
    double dx, dy, dz;
    do {
        const double lam =
            std::sqrt(x * y) + std::sqrt(y * z) + std::sqrt(z * x);
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        const double mu = (x + y + z) / 3.0;
        dx = (mu - x) / mu;
        dy = (mu - y) / mu;
        dz = (mu - z) / mu;
    } while (std::fabs(dx) > 2e-4 || std::fabs(dy) > 2e-4 ||
             std::fabs(dz) > 2e-4);
    const double e2 = dx * dy - dz * dz;
    const double e3 = dx * dy * dz;
    const double mu = (x + y + z) / 3.0;
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) /
           std::sqrt(mu);
}

// F(theta, s) for theta in [-pi/2, pi/2], via R_F.
double incomplete_core(double theta, double m, double mc) {
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    if (st == 0.0) return 0.0;
    const double q = mc + m * ct * ct; // 1 - m sin^2
    return st * carlson_rf(ct * ct, q, 1.0);
}

// First-order hyperbolic expansion in the complement m' = 1 - s^2
// (A&S 16.15); valid while m' * e^{2|u|} is small.
JacobiTriple near_degenerate_triple(double u, double mc) {
    const double t = std::tanh(u);
    const double se = 1.0 / std::cosh(u);
    const double shc = std::sinh(u) * std::cosh(u);
    const double q = 0.25 * mc;
    return {t + q * (shc - u) * se * se,
            se - q * (shc - u) * t * se,
            se + q * (shc + u) * t * se};
}

// Enforce the Pythagorean constraints without losing relative accuracy:
// rebuild the member closest to 1 from the small one, and dn from the
// cancellation-free combination dn^2 = m' + m cn^2.
JacobiTriple recondition(double sn, double cn, double dn, double m,
                         double mc) {
    if (std::fabs(sn) < std::fabs(cn)) {
        cn = std::copysign(std::sqrt(1.0 - sn * sn), cn);
        dn = std::copysign(std::sqrt(1.0 - m * sn * sn), dn);
    } else {
        sn = std::copysign(std::sqrt(1.0 - cn * cn), sn);
        dn = std::copysign(std::sqrt(mc + m * cn * cn), dn);
    }
    return {sn, cn, dn};
}

} // namespace

EllipticModulus EllipticModulus::from_m(double s_squared) {
    if (!(s_squared >= 0.0 && s_squared <= 1.0))
        throw std::domain_error("elliptic modulus: s^2 outside [0, 1]");
    return EllipticModulus(s_squared, 1.0 - s_squared);
}

EllipticModulus EllipticModulus::from_complement(double complement) {
    if (!(complement >= 0.0 && complement <= 1.0))
        throw std::domain_error("elliptic modulus: 1 - s^2 outside [0, 1]");
    return EllipticModulus(1.0 - complement, complement);
}

double EllipticModulus::s() const { return std::sqrt(m_); }

double complete_K(const EllipticModulus& mod) {
    if (mod.degenerate())
        throw degenerate_modulus_error(
            "complete_K: degenerate modulus s^2 = 1, K diverges");
    double a = 1.0;
    double b = std::sqrt(mod.complement());
    while (std::fabs(a - b) > kEps * a) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return M_PI / (a + b);
}

double incomplete_F(double theta, const EllipticModulus& mod) {
    const double n = std::round(theta / M_PI);
    const double tr = theta - n * M_PI; // in [-pi/2, pi/2]
    if (mod.degenerate()) {
        if (n != 0.0 || std::fabs(std::cos(tr)) < 1e-15)
            throw degenerate_modulus_error(
                "incomplete_F: divergent at s^2 = 1 beyond |theta| < pi/2");
        return std::atanh(std::sin(tr));
    }
    double val = incomplete_core(tr, mod.m(), mod.complement());
    if (n != 0.0) val += 2.0 * n * complete_K(mod);
    return val;
}

JacobiTriple jacobi_sn_cn_dn(double u, const EllipticModulus& mod) {
    const double m = mod.m();
    const double mc = mod.complement();
    if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};
    if (mc == 0.0) {
        const double se = 1.0 / std::cosh(u);
        return {std::tanh(u), se, se};
    }
    if (mc * std::exp(2.0 * std::fabs(u)) < 1e-6) {
        const JacobiTriple j = near_degenerate_triple(u, mc);
        return recondition(j.sn, j.cn, j.dn, m, mc);
    }

    // descending Landen / AGM scale (A&S 16.4)
    double a[32], c[32];
    a[0] = 1.0;
    c[0] = std::sqrt(m);
    double b = std::sqrt(mc);
    int n = 0;
    while (std::fabs(c[n]) > kEps * a[n] && n < 31) {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
    }
    double phi = std::ldexp(a[n] * u, n);
    double phi_prev = phi;
    for (int j = n; j >= 1; --j) {
        phi_prev = phi;
        phi = 0.5 * (phi + std::asin(c[j] / a[j] * std::sin(phi)));
    }
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    // after the loop phi == phi_0 and phi_prev == phi_1
    const double dn = (n == 0) ? std::sqrt(1.0 - m * sn * sn)
                               : cn / std::cos(phi_prev - phi);
    return recondition(sn, cn, dn, m, mc);
}

} // namespace instanton
