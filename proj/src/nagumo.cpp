#include "radvar/nagumo.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "radvar/envelope.hpp"
#include "radvar/numerics.hpp"

namespace radvar {

NagumoFunction nagumo_from_g(const ConvexScalar& g) {
  double x0 = g.rightmost_min();
  if (std::isinf(x0))
    fail(ErrorCode::DegenerateG, "g has no rightmost minimizer");
  double g0 = g.value(0.0);
  NagumoFunction out;
  out.psi = ConvexScalar::hinge_shift(g, g0, x0).with_label("psi");
  out.s0 = x0;
  out.asymptotic_slope = g.asymptotic_slope();
  if (out.asymptotic_slope <= 0.0)
    fail(ErrorCode::DegenerateG, "gauge of g vanishes identically (M = 0)");
  return out;
}

NagumoFunction nagumo_from_g(const std::function<ConvexScalar(double)>& g_at,
                             std::span<const double> r_samples, double s_max) {
  if (r_samples.empty())
    fail(ErrorCode::BadDomain, "need at least one r sample");
  if (!(s_max > 0.0)) fail(ErrorCode::BadDomain, "s_max must be positive");

  std::vector<ConvexScalar> family;
  family.reserve(r_samples.size());
  for (double r : r_samples) family.push_back(g_at(r));

  const int n = 512;
  std::vector<double> ss(n + 1), vv(n + 1);
  bool all_superlinear = true;
  double min_tail = kInf;
  for (auto& f : family) {
    double a = f.asymptotic_slope();
    if (!std::isinf(a)) all_superlinear = false;
    min_tail = std::min(min_tail, a);
  }
  for (int i = 0; i <= n; ++i) {
    double s = s_max * i / n;
    double m = kInf;
    for (std::size_t k = 0; k < family.size(); ++k) {
      double d = family[k].value(s) - family[k].value(0.0);
      m = std::min(m, d);
    }
    ss[i] = s;
    vv[i] = std::isinf(m) ? vv[i == 0 ? 0 : i - 1] : std::max(m, 0.0);
  }
  auto [env, P] = convex_envelope(ss, vv);

  // Rebuild with an open domain: the gauge is a lower bound valid for all s,
  // extended past s_max by its final hull slope.
  std::vector<double> hb(env.breakpoints().begin(), env.breakpoints().end());
  std::vector<double> hv(env.knot_values().begin(), env.knot_values().end());
  ConvexScalar psi = ConvexScalar::pwl(std::move(hb), std::move(hv), kInf, "psi");

  NagumoFunction out;
  out.s0 = psi.rightmost_min();
  if (std::isinf(out.s0) || psi.value(s_max) <= 0.0)
    fail(ErrorCode::DegenerateG, "gauge of g vanishes identically on [0, s_max]");
  out.asymptotic_slope = all_superlinear ? kInf : psi.asymptotic_slope();
  out.psi = std::move(psi);
  if (out.asymptotic_slope <= 0.0)
    fail(ErrorCode::DegenerateG, "gauge of g has M = 0");
  return out;
}

double ratio_root(const NagumoFunction& psi, double m) {
  if (!(m > 0.0)) fail(ErrorCode::BadDomain, "ratio level must be positive");
  if (m >= psi.asymptotic_slope)
    fail(ErrorCode::RatioUnreachable, "m >= M: the ratio never reaches m");

  const ConvexScalar& f = psi.psi;
  auto gap = [&](double s) {
    double v = f.value(s);
    return std::isinf(v) ? v : v - m * s;
  };
  // The gap is convex with gap(s0) <= 0; find a positive bracket.
  double lo = psi.s0;
  double hi = std::max(2.0 * psi.s0, 1.0);
  while (!(gap(hi) > 0.0)) {
    hi *= 2.0;
    if (hi > 1e280)
      fail(ErrorCode::RatioUnreachable, "psi(s) - m s never becomes positive");
  }
  double sigma =
      bisect_sup([&](double s) { return gap(s) <= 0.0; }, lo, hi);
  if (sigma > psi.s0 * (1.0 + 1e-9) + 1e-12) {
    double resid = std::abs(f.value(sigma) / sigma - m);
    if (!(resid <= 1e-10 * m))
      fail(ErrorCode::Internal, "ratio root residual above tolerance");
  }
  return sigma;
}

ConvexScalar build_phi_a(const ConvexScalar& phi, double a) {
  if (!(a >= 0.0)) fail(ErrorCode::BadDomain, "a must be nonnegative");
  if (!std::isinf(phi.asymptotic_slope()) || !std::isinf(phi.domain_end()))
    fail(ErrorCode::NotSuperlinear,
         "phi must be superlinear with unbounded domain");
  if (phi.impl().deriv_plus(0.0) < -1e-12)
    fail(ErrorCode::NotSuperlinear, "phi must be non-decreasing");

  const double c = phi.value(a);
  // Largest s with phi(s) <= c (phi may be flat through a).
  double hi = std::max(2.0 * a, 1.0);
  while (phi.value(hi) <= c) hi *= 2.0;
  double x0 = a == 0.0 && phi.value(0.0) >= c
                  ? phi.rightmost_min()
                  : bisect_sup([&](double s) { return phi.value(s) <= c; },
                               a, hi);

  ConvexScalar out = ConvexScalar::hinge_shift(phi, c, x0)
                         .with_label(phi.label() + "_a");

  // Membership in Phi_a, checked on a grid: zero on [0,a], convex,
  // non-decreasing.
  const int kProbes = 64;
  double span = 3.0 * std::max(a, 1.0);
  double prev_hi = -kInf;
  for (int i = 0; i <= kProbes; ++i) {
    double s = span * i / kProbes;
    if (s <= a && out.value(s) != 0.0)
      fail(ErrorCode::Internal, "phi_a fails to vanish on [0,a]");
    Interval d = subgradient(out, s);
    if (s > 0.0 && (d.lo < prev_hi - 1e-9 || d.lo < -1e-12))
      fail(ErrorCode::Internal, "phi_a fails the convexity scan");
    prev_hi = std::isinf(d.hi) ? d.lo : d.hi;
  }
  return out;
}

}  // namespace radvar
