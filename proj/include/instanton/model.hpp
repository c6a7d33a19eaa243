#pragma once

#include <cmath>
#include <stdexcept>

namespace instanton {

/// Parameters of the phi^4 double well
///   V(x) = M w^2 / (4 a^2) (x - a)^2 (x + a)^2,  a = sqrt(M w^2 / delta).
/// Default reduced units: M = omega = hbar = 1, delta free.
struct DoubleWellParams {
    double mass = 1.0;
    double omega = 1.0;
    double delta = 1.0;
    double hbar = 1.0;

    double a() const { return std::sqrt(mass * omega * omega / delta); }
    /// harmonic frequency of the wells, sqrt(V''(a)/M) = sqrt2 omega
    double well_frequency() const { return M_SQRT2 * omega; }
    double barrier_height() const {
        const double a2 = mass * omega * omega / delta;
        return 0.25 * delta * a2 * a2; // delta a^4 / 4
    }

    void validate() const {
        if (!(mass > 0.0 && omega > 0.0 && delta > 0.0 && hbar > 0.0))
            throw std::domain_error(
                "DoubleWellParams: M, omega, delta, hbar must be positive");
    }
};

/// V(x), evaluated in the factored form (no cancellation at the minima).
double potential(const DoubleWellParams& p, double x);

/// V'(x) = delta x^3 - M w^2 x.
double d_potential(const DoubleWellParams& p, double x);

/// V''(x) = M w^2 (3 x^2 / a^2 - 1).
double dd_potential(const DoubleWellParams& p, double x);

/// Matsubara map L = hbar / (kB T). Throws on T <= 0.
double temperature_to_size(const DoubleWellParams& p, double T,
                           double kB = 1.0);

} // namespace instanton
