#include "instanton/propagator.hpp"

#include <cmath>

#include "instanton/action.hpp"

namespace instanton {

double omega_infinity(const DoubleWellParams& p) {
    p.validate();
    const double A = asymptotic_action(p);
    const double norm_sq = A / p.mass; // Nbar^{-2} in the L -> inf limit
    // 2 sqrt3 w_well = sqrt(12 w_well^2), the L -> inf determinant ratio;
    // w_well = sqrt(V''(a)/M) is the harmonic frequency of the wells
    return std::exp(-A / p.hbar) * 2.0 * std::sqrt(3.0) *
           p.well_frequency() *
           std::sqrt(p.mass * norm_sq / (2.0 * M_PI * p.hbar));
}

double amplitude_infinite(const DoubleWellParams& p, double L,
                          bool* validity_warning) {
    p.validate();
    if (!(L > 0.0))
        throw std::domain_error("amplitude_infinite: L must be positive");
    if (validity_warning) *validity_warning = p.omega * L < 5.0;
    const double ww = p.well_frequency();
    return std::sqrt(p.mass * ww / (M_PI * p.hbar)) *
           std::exp(-0.5 * ww * L) * omega_infinity(p) * L;
}

TunnelingReport kink_report(const DoubleWellParams& p, double L, double kB) {
    TunnelingReport r;
    r.L = L;
    r.temperature = p.hbar / (kB * L);
    r.E = 0.0;
    r.kappa = 0.5;
    r.s_squared = 1.0;
    const double ww = p.well_frequency();
    r.action = asymptotic_action(p);
    r.zero_mode_norm_sq = r.action / p.mass;
    r.det_ratio = 12.0 * ww * ww; // asymptotic anchor
    r.harmonic_det = harmonic_determinant(ww, L);
    r.omega_qf = 2.0 * std::sqrt(3.0) * ww *
                 std::sqrt(p.mass * r.zero_mode_norm_sq /
                           (2.0 * M_PI * p.hbar));
    r.omega_tunnel = omega_infinity(p);
    r.amplitude = amplitude_infinite(p, L, &r.validity_warning);
    r.convention = "harmonic-wavefunction (infinite size)";
    r.ledger = {
        {"endpoint_wavefunctions", std::sqrt(p.mass * ww /
                                             (M_PI * p.hbar))},
        {"harmonic_factor", std::exp(-0.5 * ww * L)},
        {"exp_minus_action", std::exp(-r.action / p.hbar)},
        {"fluctuation_prefactor", r.omega_qf},
        {"collective_coordinate_L", L},
    };
    return r;
}

TunnelingReport amplitude_finite(const DoubleWellParams& p, double L,
                                 const PipelineOptions& opt) {
    p.validate();
    const FiniteInstanton path = solve_energy_for_size(p, L);

    TunnelingReport r;
    r.L = L;
    r.temperature = p.hbar / (opt.kB * L);
    r.E = path.energy();
    r.kappa = path.kappa();
    r.s_squared = path.modulus().m();
    r.asymptotic_background = path.asymptotic();
    r.action = classical_action(path, L);
    r.zero_mode_norm_sq = zero_mode_norm_sq(path, L);

    // the harmonic reference must share the continuum edge of the
    // stability operator, i.e. carry the well frequency sqrt2 omega
    const double ww = p.well_frequency();
    const StabilityOperator op = build_stability_operator(path);
    const DeterminantRatio det = regularized_ratio_checked(
        op, ww, L, opt.grid_points, opt.method_tolerance,
        &r.det_ratio_gy);
    r.det_ratio_spectral = det.ratio;
    r.det_ratio = det.ratio;
    r.harmonic_det = det.harmonic_det;

    r.omega_qf = std::sqrt(p.mass * r.zero_mode_norm_sq /
                           (2.0 * M_PI * p.hbar)) *
                 std::sqrt(std::fabs(r.det_ratio));
    r.omega_tunnel = std::exp(-r.action / p.hbar) * r.omega_qf;

    const double free_norm = std::sqrt(p.mass / (2.0 * M_PI * p.hbar * L));
    const double harm_factor = 1.0 / (2.0 * std::sinh(0.5 * ww * L));
    r.amplitude = free_norm * harm_factor * r.omega_tunnel * L;
    r.validity_warning = p.omega * L < 5.0;
    r.convention = "free-particle (finite size)";
    r.ledger = {
        {"free_particle_norm", free_norm},
        {"harmonic_factor", harm_factor},
        {"exp_minus_action", std::exp(-r.action / p.hbar)},
        {"zero_mode_sqrt", std::sqrt(p.mass * r.zero_mode_norm_sq /
                                     (2.0 * M_PI * p.hbar))},
        {"det_ratio_sqrt", std::sqrt(std::fabs(r.det_ratio))},
        {"collective_coordinate_L", L},
    };
    return r;
}

} // namespace instanton
