#pragma once

#include "instanton/background.hpp"

namespace instanton {

struct ActionResult {
    double action;             // Int (M/2 xdot^2 + V) dtau over the window
    double zero_mode_norm_sq;  // Nbar^{-2} = 2 Int_0^{L/2} xdot^2 dtau
    double window;             // L
};

/// Euclidean action of the path over [-L/2, L/2], adaptive quadrature.
double classical_action(const ClassicalPath& path, double L);

/// Exact L -> infinity kink action (2 sqrt2 / 3) M^2 w^3 / delta.
double asymptotic_action(const DoubleWellParams& p);

/// Nbar^{-2} = 2 Int_0^{L/2} |xdot|^2 dtau (collective-coordinate Jacobian).
double zero_mode_norm_sq(const ClassicalPath& path, double L);

ActionResult evaluate_action(const ClassicalPath& path, double L);

} // namespace instanton
