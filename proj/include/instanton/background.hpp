#pragma once

#include <span>

#include "instanton/elliptic.hpp"
#include "instanton/model.hpp"

namespace instanton {

/// Uniform interface over the classical Euclidean backgrounds on the
/// window [-L/2, L/2].
class ClassicalPath {
  public:
    virtual ~ClassicalPath() = default;
    virtual double position(double tau) const = 0;
    virtual double velocity(double tau) const = 0;
    virtual double energy() const = 0;
    virtual const DoubleWellParams& parameters() const = 0;
    virtual double half_window() const = 0;
};

/// Infinite-size (anti)kink x_cl = sign * a tanh[w (tau - tau0) / sqrt(2)],
/// restricted to a finite evaluation window of extent L.
class KinkPath final : public ClassicalPath {
  public:
    KinkPath(DoubleWellParams p, double L, double tau0 = 0.0, int sign = +1);

    double position(double tau) const override;
    double velocity(double tau) const override;
    double energy() const override { return 0.0; }
    const DoubleWellParams& parameters() const override { return p_; }
    double half_window() const override { return 0.5 * L_; }
    double tau0() const { return tau0_; }
    int sign() const { return sign_; }

  private:
    DoubleWellParams p_;
    double L_;
    double tau0_;
    int sign_;
};

/// Finite-size elliptic instanton, parameterized by the first-integral
/// energy E >= 0. The canonical branch (position()) is
///   x = (2 kappa)^{1/4} a sn dn / cn  at  phase = (kappa/2)^{1/4} w (tau - tau0).
class FiniteInstanton final : public ClassicalPath {
  public:
    FiniteInstanton(DoubleWellParams p, double E, double L,
                    double tau0 = 0.0);

    double position(double tau) const override;
    double velocity(double tau) const override;
    double energy() const override { return E_; }
    const DoubleWellParams& parameters() const override { return p_; }
    double half_window() const override { return 0.5 * L_; }

    double size() const { return L_; }
    double tau0() const { return tau0_; }
    double kappa() const { return kappa_; }
    const EllipticModulus& modulus() const { return mod_; }
    double phase(double tau) const { return phase_rate_ * (tau - tau0_); }
    /// (2 kappa)^{1/4} a
    double amplitude_scale() const { return scale_; }
    /// true when E was set from the large-L asymptotic estimate because
    /// the boundary condition is below double-precision resolution
    bool asymptotic() const { return asymptotic_; }

  private:
    friend FiniteInstanton solve_energy_for_size(const DoubleWellParams&,
                                                 double, double);
    DoubleWellParams p_;
    double E_;
    double L_;
    double tau0_;
    double kappa_;
    EllipticModulus mod_;
    double phase_rate_; // (kappa/2)^{1/4} w
    double scale_;      // (2 kappa)^{1/4} a
    bool asymptotic_ = false;
};

/// Canonical branch of the finite-size solution; throws
/// singular_point_error at |phase| >= K(s) where cn vanishes.
double instanton_position_1(const FiniteInstanton& f, double tau);

/// Second branch -(2 kappa)^{1/4} a cn / (sn dn); pole at phase = 0.
double instanton_position_2(const FiniteInstanton& f, double tau);

/// Solve the boundary condition x(L/2) = a for the instanton energy.
/// Throws no_instanton_error when no E below E_max (in units of
/// delta a^4) satisfies it.
FiniteInstanton solve_energy_for_size(const DoubleWellParams& p, double L,
                                      double E_max_reduced = 1e6);

/// Quadrature form tau - tau0 = sqrt(M/2) Int_0^x dx' / sqrt(E + V(x')),
/// the independent oracle for instanton_position_1.
double time_of_position(const DoubleWellParams& p, double E, double x);

/// Window extent L at which the given branch meets its boundary condition
/// |x| = a, for E > 0. branch is 1 or 2.
double size_for_energy(const DoubleWellParams& p, double E, int branch);

/// max over grid of |M x_dd - V'(x)|, with x_dd by central differences.
double euler_lagrange_residual(const ClassicalPath& path,
                               std::span<const double> grid);

} // namespace instanton
