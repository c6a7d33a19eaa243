#include "instanton/fluctuation.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include <lapacke.h>

#include "instanton/action.hpp"
#include "instanton/errors.hpp"
#include "instanton/ode.hpp"

namespace instanton {

namespace {

std::vector<double> grid_eigenvalues(const StabilityOperator& op, int n) {
    const double L = 2.0 * op.half_window;
    const double h = L / (n + 1);
    std::vector<double> d(n), e(n, 0.0);
    for (int i = 0; i < n - 1; ++i) e[i] = -1.0 / (h * h);
    for (int i = 0; i < n; ++i) {
        const double tau = -op.half_window + (i + 1) * h;
        d[i] = 2.0 / (h * h) + op.U(tau);
    }
    const lapack_int info = LAPACKE_dsterf(n, d.data(), e.data());
    if (info != 0)
        throw numerics_error("dsterf failed to converge");
    return d; // ascending
}

// log of Pi_k nu_k / Pi_{k>=1} mu_k on one grid (zero mode excised)
double log_ratio_on_grid(const StabilityOperator& op, double omega, double L,
                         int n) {
    const StabilityOperator harm = harmonic_operator(omega, L);
    const std::vector<double> mu = grid_eigenvalues(op, n);
    const std::vector<double> nu = grid_eigenvalues(harm, n);
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
        s += std::log(nu[k]);
        if (k >= 1) {
            if (!(mu[k] > 0.0))
                throw numerics_error(
                    "spectral ratio: non-positive fluctuation eigenvalue "
                    "above the zero mode");
            s -= std::log(mu[k]);
        }
    }
    return s;
}

} // namespace

StabilityOperator build_stability_operator(const ClassicalPath& path) {
    const DoubleWellParams p = path.parameters();
    const ClassicalPath* pp = &path;
    return {[p, pp](double tau) {
                return dd_potential(p, pp->position(tau)) / p.mass;
            },
            path.half_window()};
}

StabilityOperator harmonic_operator(double omega, double L) {
    const double w2 = omega * omega;
    return {[w2](double) { return w2; }, 0.5 * L};
}

SpectrumResult spectrum_finite_difference(const StabilityOperator& op,
                                          int n_points, bool richardson) {
    SpectrumResult out;
    out.accuracy_warning = n_points < 64;
    const double L = 2.0 * op.half_window;
    out.grid_spacing = L / (n_points + 1);
    out.eigenvalues = grid_eigenvalues(op, n_points);
    out.extrapolated = richardson;
    if (richardson) {
        // 2n+1 interior points halves the spacing exactly
        const int n2 = 2 * n_points + 1;
        const std::vector<double> fine = grid_eigenvalues(op, n2);
        for (int k = 0; k < n_points; ++k)
            out.eigenvalues[k] =
                (4.0 * fine[k] - out.eigenvalues[k]) / 3.0;
    }
    return out;
}

std::vector<double> ground_mode_grid(const StabilityOperator& op,
                                     int n_points) {
    const double L = 2.0 * op.half_window;
    const double h = L / (n_points + 1);
    // e and w are sized n (not n-1 / m): LAPACKE's input validation scans
    // the full documented array extents
    std::vector<double> d(n_points), e(n_points, 0.0);
    for (int i = 0; i < n_points - 1; ++i) e[i] = -1.0 / (h * h);
    for (int i = 0; i < n_points; ++i)
        d[i] = 2.0 / (h * h) + op.U(-op.half_window + (i + 1) * h);
    std::vector<double> dw(d), ew(e);
    if (LAPACKE_dsterf(n_points, dw.data(), ew.data()) != 0)
        throw numerics_error("dsterf failed to converge");
    std::vector<double> w(n_points, 0.0);
    w[0] = dw[0];
    std::vector<lapack_int> iblock(n_points, 1), isplit(n_points, 0);
    isplit[0] = n_points;
    std::vector<double> z(n_points);
    std::vector<lapack_int> ifail(n_points, 0);
    const lapack_int info = LAPACKE_dstein(
        LAPACK_COL_MAJOR, n_points, d.data(), e.data(), 1, w.data(),
        iblock.data(), isplit.data(), z.data(), n_points, ifail.data());
    if (info != 0)
        throw numerics_error("dstein failed on the ground mode");
    // fix overall sign: peak positive
    double peak = 0.0;
    for (double v : z)
        if (std::fabs(v) > std::fabs(peak)) peak = v;
    if (peak < 0.0)
        for (double& v : z) v = -v;
    return z;
}

std::function<double(double)> zero_mode_profile(const ClassicalPath& path) {
    const double L = 2.0 * path.half_window();
    const double nbar = 1.0 / std::sqrt(zero_mode_norm_sq(path, L));
    const ClassicalPath* pp = &path;
    return [pp, nbar](double tau) { return nbar * pp->velocity(tau); };
}

double harmonic_determinant(double omega, double L) {
    if (!(L > 0.0))
        throw std::domain_error("harmonic_determinant: L must be positive");
    const double s = std::sinh(0.5 * omega * L);
    return -4.0 * s * s;
}

double gelfand_yaglom_shifted(const StabilityOperator& op, double lambda) {
    auto rhs = [&](double tau, const ode::State<2>& y) -> ode::State<2> {
        return {y[1], (op.U(tau) - lambda) * y[0]};
    };
    const ode::State<2> end = ode::integrate<2>(
        rhs, {0.0, 1.0}, -op.half_window, op.half_window, 1e-11, 1e-30);
    return end[0];
}

double gelfand_yaglom_solution(const StabilityOperator& op) {
    return gelfand_yaglom_shifted(op, 0.0);
}

DeterminantRatio regularized_ratio(const StabilityOperator& op, double omega,
                                   double L, DetMethod method,
                                   int n_points) {
    double ratio;
    if (method == DetMethod::spectral) {
        const int nc = n_points / 2;
        const double h1 = L / (nc + 1);
        const double h2 = L / (n_points + 1);
        const double s1 = log_ratio_on_grid(op, omega, L, nc);
        const double s2 = log_ratio_on_grid(op, omega, L, n_points);
        const double s =
            (h1 * h1 * s2 - h2 * h2 * s1) / (h1 * h1 - h2 * h2);
        ratio = std::exp(s);
    } else {
        // characteristic function F(lambda) = y_lambda(L/2) satisfies
        // F(0)/eps_0 ~= -F'(0) when eps_0 is the only near-zero eigenvalue,
        // so Det^R[O] is -F'(0) in GY normalization
        const double yh =
            gelfand_yaglom_shifted(harmonic_operator(omega, L), 0.0);
        // F grows like exp(L sqrt(U_inf - lambda)), so the finite-difference
        // step must shrink as 1/L to keep L delta / (2 omega) small
        const double del =
            std::fmin(0.1 * omega * omega, 0.2 * omega / L);
        auto F = [&](double lam) { return gelfand_yaglom_shifted(op, lam); };
        const double d1 = (F(del) - F(-del)) / (2.0 * del);
        const double d2 = (F(0.5 * del) - F(-0.5 * del)) / del;
        const double deriv = (4.0 * d2 - d1) / 3.0;
        if (!(deriv < 0.0))
            throw numerics_error(
                "gelfand_yaglom ratio: characteristic function has no "
                "near-zero root (no zero mode to excise)");
        ratio = yh / (-deriv);
    }
    const double hdet = harmonic_determinant(omega, L);
    return {hdet, std::fabs(hdet) / ratio, ratio, method};
}

DeterminantRatio regularized_ratio_checked(const StabilityOperator& op,
                                           double omega, double L,
                                           int n_points, double rel_tol,
                                           double* gy_value) {
    const DeterminantRatio spec =
        regularized_ratio(op, omega, L, DetMethod::spectral, n_points);
    const DeterminantRatio gy =
        regularized_ratio(op, omega, L, DetMethod::gelfand_yaglom, n_points);
    if (gy_value) *gy_value = gy.ratio;
    const double rel = std::fabs(spec.ratio - gy.ratio) /
                       std::fmax(std::fabs(spec.ratio), 1e-300);
    if (rel > rel_tol) {
        char buf[192];
        std::snprintf(buf, sizeof(buf),
                      "determinant methods disagree: spectral %.10e vs "
                      "gelfand_yaglom %.10e (rel %.3e)",
                      spec.ratio, gy.ratio, rel);
        throw numerics_error(buf);
    }
    return spec;
}

} // namespace instanton
