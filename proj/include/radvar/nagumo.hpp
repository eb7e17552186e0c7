#ifndef RADVAR_NAGUMO_HPP
#define RADVAR_NAGUMO_HPP

#include <functional>
#include <span>

#include "radvar/convex_scalar.hpp"

namespace radvar {

/// A convex non-decreasing coercivity gauge: psi(0) = 0, psi >= 0, and
/// psi(s)/s non-decreasing past the largest zero s0. The asymptotic slope M
/// is +inf exactly when the growth is superlinear.
struct NagumoFunction {
  ConvexScalar psi;
  double s0 = 0.0;
  double asymptotic_slope = kInf;  // M
};

/// Gauge of an autonomous Lagrangian: psi = g - g(0), exact.
NagumoFunction nagumo_from_g(const ConvexScalar& g);

/// Gauge of a family r |-> g(r, .): the convex envelope of
/// s |-> min_r [g(r,s) - g(r,0)] over the given r samples, built on
/// [0, s_max]. Throws DegenerateG when the gauge vanishes identically.
NagumoFunction nagumo_from_g(
    const std::function<ConvexScalar(double)>& g_at,
    std::span<const double> r_samples, double s_max);

/// The unique sigma > s0 with psi(sigma)/sigma = m for 0 < m < M, computed
/// as sup{s : psi(s) <= m s}; degenerates to s0 when the ratio starts at or
/// above m. Residual |psi(sigma)/sigma - m| <= 1e-10 m at a genuine root.
/// Throws RatioUnreachable for m >= M.
double ratio_root(const NagumoFunction& psi, double m);

/// phi_a = max(phi - phi(a), 0): the member of Phi_a generated by a
/// superlinear convex non-decreasing phi; vanishes exactly on [0, a].
/// Throws NotSuperlinear when phi has a finite asymptotic slope or a finite
/// domain.
ConvexScalar build_phi_a(const ConvexScalar& phi, double a);

}  // namespace radvar

#endif  // RADVAR_NAGUMO_HPP
