#include "radvar/envelope.hpp"

#include <algorithm>
#include <cmath>

namespace radvar {

double ExtremalSet::distance(double s) const {
  if (points.empty()) return kInf;
  auto it = std::lower_bound(points.begin(), points.end(), s);
  double d = kInf;
  if (it != points.end()) d = std::min(d, std::abs(*it - s));
  if (it != points.begin()) d = std::min(d, std::abs(*(it - 1) - s));
  return d;
}

std::pair<ConvexScalar, ExtremalSet> convex_envelope(
    std::span<const double> s, std::span<const double> value) {
  if (s.size() < 2) fail(ErrorCode::TooFewSamples, "need at least 2 samples");
  if (s.size() != value.size())
    fail(ErrorCode::BadDomain, "sample size mismatch");
  if (s[0] != 0.0) fail(ErrorCode::BadDomain, "samples must start at s = 0");
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!(s[i + 1] > s[i]))
      fail(ErrorCode::BadDomain, "sample abscissae must be strictly increasing");
  for (double v : value)
    if (!std::isfinite(v)) fail(ErrorCode::BadDomain, "sample values must be finite");

  // Monotone-chain lower hull. Collinear middle points are popped, so the
  // vertex set holds exactly the extreme points of the epigraph.
  std::vector<double> hb, hv;
  hb.reserve(s.size());
  hv.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    while (hb.size() >= 2) {
      const double x1 = hb[hb.size() - 2], y1 = hv[hv.size() - 2];
      const double x2 = hb.back(), y2 = hv.back();
      const double cross = (x2 - x1) * (value[i] - y1) - (y2 - y1) * (s[i] - x1);
      if (cross <= 0.0) {
        hb.pop_back();
        hv.pop_back();
      } else {
        break;
      }
    }
    hb.push_back(s[i]);
    hv.push_back(value[i]);
  }

  ExtremalSet P{hb};
  ConvexScalar env = ConvexScalar::pwl(std::move(hb), std::move(hv),
                                       s.back(), "envelope");
  return {std::move(env), std::move(P)};
}

}  // namespace radvar
