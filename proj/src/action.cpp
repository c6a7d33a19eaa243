#include "instanton/action.hpp"

#include <cmath>

#include "instanton/quadrature.hpp"

namespace instanton {

double classical_action(const ClassicalPath& path, double L) {
    const DoubleWellParams& p = path.parameters();
    auto density = [&](double tau) {
        const double v = path.velocity(tau);
        return 0.5 * p.mass * v * v + potential(p, path.position(tau));
    };
    // split at the center of motion: the integrand is a localized bump there
    const auto left = quad::integrate(density, -0.5 * L, 0.0, 1e-12);
    const auto right = quad::integrate(density, 0.0, 0.5 * L, 1e-12);
    return left.value + right.value;
}

double asymptotic_action(const DoubleWellParams& p) {
    return 2.0 * M_SQRT2 / 3.0 * p.mass * p.mass * p.omega * p.omega *
           p.omega / p.delta;
}

double zero_mode_norm_sq(const ClassicalPath& path, double L) {
    auto density = [&](double tau) {
        const double v = path.velocity(tau);
        return v * v;
    };
    return 2.0 * quad::integrate(density, 0.0, 0.5 * L, 1e-12).value;
}

ActionResult evaluate_action(const ClassicalPath& path, double L) {
    return {classical_action(path, L), zero_mode_norm_sq(path, L), L};
}

} // namespace instanton
