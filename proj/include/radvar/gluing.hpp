#ifndef RADVAR_GLUING_HPP
#define RADVAR_GLUING_HPP

#include "radvar/convex_scalar.hpp"
#include "radvar/nagumo.hpp"

namespace radvar {

/// Parameters of the superlinear regluing of a slow-growth Lagrangian:
/// delta = (M - M0)/3, sigma1 solves psi(sigma1)/sigma1 = M0 + 2 delta,
/// zeta > sigma1, phi_zeta in Phi_zeta. The per-r quantities (sigma_hat and
/// the tangent line) are derived from g(r, .) on demand.
struct GluingParams {
  double m0 = 0.0;
  double delta = 0.0;
  double sigma1 = 0.0;
  double zeta = 0.0;
  ConvexScalar phi_zeta;

  double tangent_slope() const { return m0 + delta; }
};

/// Builds the gluing parameters from the gauge and the momentum bound.
/// Requires a finite M > M0 (superlinear problems need no regluing).
/// zeta = sigma1 + zeta_margin; phi_zeta is generated from `phi_base`
/// (default s^2).
GluingParams make_gluing_params(const NagumoFunction& psi, double m0,
                                double zeta_margin = 1.0,
                                const ConvexScalar* phi_base = nullptr);

/// sigma_hat(r) = smallest element of dg*(r, M0 + delta).
double sigma_hat(const ConvexScalar& g_r, const GluingParams& params);

/// The glued Lagrangian: g on [0, sigma_hat], tangent line + phi_zeta
/// beyond. Convex, superlinear, <= g + phi_zeta everywhere, and
/// <= g - delta (s - sigma1) on [sigma1, zeta].
/// Throws InconsistentParams when sigma_hat > zeta.
ConvexScalar build_glued(const ConvexScalar& g_r, const GluingParams& params);

}  // namespace radvar

#endif  // RADVAR_GLUING_HPP
