#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "instanton/errors.hpp"

namespace instanton::ode {

template <std::size_t N>
using State = std::array<double, N>;

// Adaptive Dormand-Prince 5(4) integration of dy/dt = f(t, y) from t0 to t1.
template <std::size_t N, class F>
State<N> integrate(const F& f, State<N> y, double t0, double t1,
                   double rel_tol = 1e-12, double abs_tol = 1e-14) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                            c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15,
                            a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113,
                            b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                            e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    const double dir = (t1 >= t0) ? 1.0 : -1.0;
    double t = t0;
    double h = dir * std::fmax(1e-8, std::fabs(t1 - t0) * 1e-4);
    State<N> k1 = f(t, y);
    long steps = 0;
    while (dir * (t1 - t) > 0.0) {
        if (++steps > 20000000)
            throw numerics_error("ode: step limit exceeded");
        if (dir * (t + h - t1) > 0.0) h = t1 - t;
        State<N> y2, y3, y4, y5, y6, y7;
        for (std::size_t i = 0; i < N; ++i)
            y2[i] = y[i] + h * a21 * k1[i];
        State<N> k2 = f(t + c2 * h, y2);
        for (std::size_t i = 0; i < N; ++i)
            y3[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        State<N> k3 = f(t + c3 * h, y3);
        for (std::size_t i = 0; i < N; ++i)
            y4[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        State<N> k4 = f(t + c4 * h, y4);
        for (std::size_t i = 0; i < N; ++i)
            y5[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] +
                                a54 * k4[i]);
        State<N> k5 = f(t + c5 * h, y5);
        for (std::size_t i = 0; i < N; ++i)
            y6[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                a64 * k4[i] + a65 * k5[i]);
        State<N> k6 = f(t + h, y6);
        for (std::size_t i = 0; i < N; ++i)
            y7[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                b5 * k5[i] + b6 * k6[i]);
        State<N> k7 = f(t + h, y7);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                   e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc =
                abs_tol +
                rel_tol * std::fmax(std::fabs(y[i]), std::fabs(y7[i]));
            err = std::fmax(err, std::fabs(ei) / sc);
        }
        if (err <= 1.0) {
            t += h;
            y = y7;
            k1 = k7; // FSAL
        }
        const double fac =
            std::clamp(0.9 * std::pow(std::fmax(err, 1e-10), -0.2), 0.2, 5.0);
        h *= fac;
        if (std::fabs(h) < 1e-15 * std::fmax(1.0, std::fabs(t)))
            throw numerics_error("ode: step size underflow");
    }
    return y;
}

} // namespace instanton::ode
