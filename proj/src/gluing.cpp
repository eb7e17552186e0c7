#include "radvar/gluing.hpp"

#include <cmath>

namespace radvar {

GluingParams make_gluing_params(const NagumoFunction& psi, double m0,
                                double zeta_margin, const ConvexScalar* phi_base) {
  const double M = psi.asymptotic_slope;
  if (std::isinf(M))
    fail(ErrorCode::InconsistentParams,
         "superlinear Lagrangians need no regluing");
  if (!(m0 < M))
    fail(ErrorCode::IncompatibleProblem, "requires M0 < M");
  if (!(zeta_margin > 0.0))
    fail(ErrorCode::BadDomain, "zeta margin must be positive");

  GluingParams out;
  out.m0 = m0;
  out.delta = (M - m0) / 3.0;
  out.sigma1 = ratio_root(psi, m0 + 2.0 * out.delta);
  out.zeta = out.sigma1 + zeta_margin;
  ConvexScalar base = phi_base ? *phi_base : ConvexScalar::power(1.0, 2.0);
  out.phi_zeta = build_phi_a(base, out.zeta);
  return out;
}

double sigma_hat(const ConvexScalar& g_r, const GluingParams& params) {
  return inverse_subgradient(g_r, params.tangent_slope()).lo;
}

ConvexScalar build_glued(const ConvexScalar& g_r, const GluingParams& params) {
  const double sh = sigma_hat(g_r, params);
  if (sh > params.zeta)
    fail(ErrorCode::InconsistentParams, "sigma_hat exceeds zeta");
  const double tv = g_r.value(sh);
  return ConvexScalar::spliced(g_r, sh, tv, params.tangent_slope(),
                               params.phi_zeta)
      .with_label(g_r.label() + "~glued");
}

}  // namespace radvar
