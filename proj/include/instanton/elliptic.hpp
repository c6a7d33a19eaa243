#pragma once

#include "instanton/errors.hpp"

namespace instanton {

/// Elliptic modulus s with s^2 in [0, 1]. Both s^2 and the complement
/// 1 - s^2 are stored so that neither is lost to cancellation near the
/// degenerate limit s^2 -> 1.
class EllipticModulus {
  public:
    static EllipticModulus from_m(double s_squared);
    static EllipticModulus from_complement(double complement);

    double s() const;
    double m() const { return m_; }            // s^2
    double complement() const { return mc_; }  // 1 - s^2
    bool degenerate() const { return mc_ == 0.0; }

  private:
    EllipticModulus(double m, double mc) : m_(m), mc_(mc) {}
    double m_;
    double mc_;
};

/// Values of the Jacobi elliptic functions at a common argument.
struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

/// Complete elliptic integral of the first kind K(s) = F(pi/2, s),
/// by arithmetic-geometric-mean iteration.
/// Throws degenerate_modulus_error at s^2 = 1 where K diverges.
double complete_K(const EllipticModulus& mod);

/// Incomplete elliptic integral of the first kind F(theta, s). Odd in
/// theta, extended outside [-pi/2, pi/2] via F(theta + pi) = F(theta) + 2K.
double incomplete_F(double theta, const EllipticModulus& mod);

/// (sn, cn, dn) at argument u, via the descending Landen (AGM) recurrence,
/// with a hyperbolic-expansion branch near the degenerate modulus.
JacobiTriple jacobi_sn_cn_dn(double u, const EllipticModulus& mod);

} // namespace instanton
