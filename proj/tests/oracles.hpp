// Independent numerical oracles used only by tests: adaptive Simpson
// quadrature and a fixed-step RK4 second-order ODE integrator. These stay
// deliberately separate from the library's Gauss-Kronrod / Dormand-Prince
// routines so that each side can certify the other.
#pragma once

#include <cmath>
#include <functional>

namespace oracle {

inline double simpson_panel(const std::function<double(double)>& f, double a,
                            double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double a, double b, double fa, double fm,
                                   double fb, double whole, double tol,
                                   int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson_panel(f, a, m, fa, flm, fm);
    const double right = simpson_panel(f, m, b, fm, frm, fb);
    if (depth > 40 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol,
                                depth + 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol,
                                depth + 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double tol = 1e-12) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = simpson_panel(f, a, b, fa, fm, fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0);
}

// Fixed-step classical RK4 for x'' = g(x), returning x(t_end).
inline double rk4_second_order(const std::function<double(double)>& accel,
                               double x0, double v0, double t_end,
                               int steps) {
    const double h = t_end / steps;
    double x = x0, v = v0;
    for (int i = 0; i < steps; ++i) {
        const double k1x = v, k1v = accel(x);
        const double k2x = v + 0.5 * h * k1v,
                     k2v = accel(x + 0.5 * h * k1x);
        const double k3x = v + 0.5 * h * k2v,
                     k3v = accel(x + 0.5 * h * k2x);
        const double k4x = v + h * k3v, k4v = accel(x + h * k3x);
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    }
    return x;
}

} // namespace oracle
