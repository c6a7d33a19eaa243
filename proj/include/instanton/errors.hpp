#pragma once

#include <stdexcept>
#include <string>

namespace instanton {

// Modulus s^2 = 1: elliptic quantities degenerate to hyperbolic forms and
// K(s) diverges; callers must branch explicitly.
struct degenerate_modulus_error : std::domain_error {
    explicit degenerate_modulus_error(const std::string& msg)
        : std::domain_error(msg) {}
};

// Evaluation requested at (or past) a pole of the classical background.
struct singular_point_error : std::domain_error {
    explicit singular_point_error(const std::string& msg)
        : std::domain_error(msg) {}
};

// No finite-size instanton exists below the configured energy cap.
struct no_instanton_error : std::runtime_error {
    explicit no_instanton_error(const std::string& msg)
        : std::runtime_error(msg) {}
};

// Quadrature / stepper / cross-validation failure with diagnostics in msg.
struct numerics_error : std::runtime_error {
    explicit numerics_error(const std::string& msg)
        : std::runtime_error(msg) {}
};

} // namespace instanton
