#pragma once

#include <map>
#include <string>

#include "instanton/background.hpp"
#include "instanton/fluctuation.hpp"

namespace instanton {

/// Assembled one-(anti)instanton amplitude with the provenance of every
/// factor recorded in the ledger.
struct TunnelingReport {
    double L = 0.0;
    double temperature = 0.0; // via L = hbar / (kB T), kB = 1 default
    double E = 0.0;
    double kappa = 0.0;
    double s_squared = 0.0;
    double action = 0.0;
    double zero_mode_norm_sq = 0.0;
    double det_ratio = 0.0;          // canonical (spectral, extrapolated)
    double det_ratio_spectral = 0.0;
    double det_ratio_gy = 0.0;
    double harmonic_det = 0.0;       // -4 sinh^2(w L / 2)
    double omega_qf = 0.0;           // quantum-fluctuation frequency factor
    double omega_tunnel = 0.0;       // Omega(L) (or Omega_inf)
    double amplitude = 0.0;
    bool asymptotic_background = false;
    bool validity_warning = false;
    std::string convention; // which normalization produced the amplitude
    std::map<std::string, double> ledger;
};

struct PipelineOptions {
    int grid_points = 4096;
    double kB = 1.0;
    double method_tolerance = 0.02;
};

/// Omega_inf = exp(-A/hbar) 2 sqrt3 w sqrt(M Nbar^{-2} / (2 pi hbar)) with
/// A the asymptotic kink action and Nbar^{-2} = A / M.
double omega_infinity(const DoubleWellParams& p);

/// Large-L one-instanton amplitude sqrt(M w / pi hbar) e^{-wL/2} Omega_inf L.
/// Sets *validity_warning for w L < 5.
double amplitude_infinite(const DoubleWellParams& p, double L,
                          bool* validity_warning = nullptr);

/// Infinite-size report (harmonic-wavefunction normalization).
TunnelingReport kink_report(const DoubleWellParams& p, double L,
                            double kB = 1.0);

/// Full finite-size pipeline: background, action, zero-mode norm,
/// regularized determinant ratio, Omega(L) and the amplitude.
TunnelingReport amplitude_finite(const DoubleWellParams& p, double L,
                                 const PipelineOptions& opt = {});

} // namespace instanton
