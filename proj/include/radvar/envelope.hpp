#ifndef RADVAR_ENVELOPE_HPP
#define RADVAR_ENVELOPE_HPP

#include <span>
#include <utility>
#include <vector>

#include "radvar/convex_scalar.hpp"

namespace radvar {

/// Abscissae of the extreme points of the epigraph of a convex envelope.
struct ExtremalSet {
  std::vector<double> points;  // sorted

  bool contains(double s, double tol) const { return distance(s) <= tol; }
  double distance(double s) const;
};

/// Lower convex hull of samples (s, value) with s strictly increasing from 0.
/// Returns the envelope g** (piecewise-linear through the hull vertices,
/// +inf beyond the last sample) and the hull-vertex abscissae P, on which
/// g = g** exactly. Throws TooFewSamples for fewer than 2 points.
std::pair<ConvexScalar, ExtremalSet> convex_envelope(
    std::span<const double> s, std::span<const double> value);

}  // namespace radvar

#endif  // RADVAR_ENVELOPE_HPP
