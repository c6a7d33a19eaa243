#pragma once

#include <cmath>
#include <cstdio>
#include <functional>

#include "instanton/errors.hpp"

namespace instanton::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
inline constexpr double kron_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kron_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kron_nodes[i]);
        fv[14 - i] = f(c + h * kron_nodes[i]);
    }
    fv[7] = f(c);
    double resk = kron_weights[7] * fv[7];
    double resg = gauss_weights[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        resk += kron_weights[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1)
            resg += gauss_weights[i / 2] * (fv[i] + fv[14 - i]);
    }
    value = resk * h;
    err = std::fabs((resk - resg) * h);
}

template <class F>
void adapt(const F& f, double a, double b, double tol, int depth,
           Result& out) {
    double v, e;
    gk15(f, a, b, v, e);
    out.evaluations += 15;
    if (e <= tol || depth >= 48) {
        out.value += v;
        out.error += e;
        return;
    }
    const double m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * tol, depth + 1, out);
    adapt(f, m, b, 0.5 * tol, depth + 1, out);
}

} // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b].
// Throws numerics_error when the requested tolerance was not reached.
template <class F>
Result integrate(const F& f, double a, double b, double rel_tol = 1e-12,
                 double abs_tol = 1e-300) {
    Result probe;
    double v0, e0;
    detail::gk15(f, a, b, v0, e0);
    probe.evaluations = 15;
    const double tol = std::fmax(abs_tol, rel_tol * std::fabs(v0));
    Result out;
    detail::adapt(f, a, b, std::fmax(tol, 1e-300), 0, out);
    out.evaluations += probe.evaluations;
    const double target =
        std::fmax(abs_tol, rel_tol * std::fabs(out.value));
    if (out.error > 64.0 * std::fmax(target, 1e-300)) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "quadrature did not converge: error %.3e, target %.3e",
                      out.error, target);
        throw numerics_error(buf);
    }
    return out;
}

} // namespace instanton::quad
