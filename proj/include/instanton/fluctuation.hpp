#pragma once

#include <functional>
#include <vector>

#include "instanton/background.hpp"

namespace instanton {

/// Schroedinger-like stability operator -d^2/dtau^2 + U(tau) on
/// [-L/2, L/2] with Dirichlet ends; U = V''(x_cl(tau)) / M.
struct StabilityOperator {
    std::function<double(double)> U;
    double half_window; // L/2
};

StabilityOperator build_stability_operator(const ClassicalPath& path);

/// Stability operator with constant potential U == w^2 (harmonic) on the
/// same window; the reference operator of the determinant ratio.
StabilityOperator harmonic_operator(double omega, double L);

struct SpectrumResult {
    std::vector<double> eigenvalues; // ascending
    double grid_spacing;
    bool extrapolated;
    bool accuracy_warning;
};

/// Eigenvalues of the symmetric tridiagonal discretization with n interior
/// points. With richardson = true a second grid of half spacing is solved
/// and the listed eigenvalues are h^2-extrapolated.
SpectrumResult spectrum_finite_difference(const StabilityOperator& op,
                                          int n_points,
                                          bool richardson = false);

/// Unit-normalized ground-state eigenvector on the n-point interior grid.
std::vector<double> ground_mode_grid(const StabilityOperator& op,
                                     int n_points);

/// Unit-normalized velocity profile xdot(tau) Nbar, the Goldstone mode.
std::function<double(double)> zero_mode_profile(const ClassicalPath& path);

/// Normalized harmonic determinant -4 sinh^2(w L / 2) (sign is a
/// boundary-condition convention; amplitudes use the absolute value).
double harmonic_determinant(double omega, double L);

/// Endpoint value y(L/2) of y'' = U y, y(-L/2) = 0, y'(-L/2) = 1
/// (proportional to the Dirichlet determinant).
double gelfand_yaglom_solution(const StabilityOperator& op);

/// Same IVP for the shifted operator U - lambda; vanishes at Dirichlet
/// eigenvalues, so it is the characteristic function of the operator.
double gelfand_yaglom_shifted(const StabilityOperator& op, double lambda);

enum class DetMethod { spectral, gelfand_yaglom };

struct DeterminantRatio {
    double harmonic_det;    // -4 sinh^2(w L / 2)
    double regularized_det; // |harmonic_det| / ratio
    double ratio;           // Det[h] / Det^R[O], units 1/time^2
    DetMethod method;
};

/// Zero-mode-regularized determinant ratio by one method.
/// spectral: matched Dirichlet grids, fluctuation product starting above
/// the excised zero mode, Richardson-extrapolated.
/// gelfand_yaglom: ratio of IVP endpoint values with the zero mode excised
/// through the lambda-derivative of the characteristic function.
DeterminantRatio regularized_ratio(const StabilityOperator& op, double omega,
                                   double L, DetMethod method,
                                   int n_points = 4096);

/// Both methods; throws numerics_error (carrying both values) if they
/// disagree beyond rel_tol. Returns the spectral result.
DeterminantRatio regularized_ratio_checked(const StabilityOperator& op,
                                           double omega, double L,
                                           int n_points = 4096,
                                           double rel_tol = 0.02,
                                           double* gy_value = nullptr);

} // namespace instanton
