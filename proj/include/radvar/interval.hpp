#ifndef RADVAR_INTERVAL_HPP
#define RADVAR_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <limits>

namespace radvar {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Closed interval of extended reals, [lo, hi] with lo <= hi.
/// The empty interval is a distinct representable value.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval empty() {
    Interval iv;
    iv.lo = kInf;
    iv.hi = -kInf;
    return iv;
  }
  static Interval point(double x) { return Interval{x, x}; }
  static Interval of(double lo, double hi) { return Interval{lo, hi}; }

  bool is_empty() const { return lo > hi; }

  bool contains(double x, double tol = 0.0) const {
    if (is_empty()) return false;
    return x >= lo - tol && x <= hi + tol;
  }

  /// Distance from x to the interval; 0 iff membership holds, +inf if empty.
  double distance(double x) const {
    if (is_empty()) return kInf;
    if (x < lo) return lo - x;
    if (x > hi) return x - hi;
    return 0.0;
  }

  double midpoint() const {
    if (std::isinf(lo) && std::isinf(hi)) return 0.0;
    if (std::isinf(hi)) return lo;
    if (std::isinf(lo)) return hi;
    return 0.5 * (lo + hi);
  }

  /// Scale by a nonnegative weight; w = 0 collapses to {0} even for
  /// unbounded endpoints.
  Interval scaled(double w) const {
    if (is_empty()) return empty();
    if (w == 0.0) return point(0.0);
    return Interval{w * lo, w * hi};
  }

  Interval negated() const {
    if (is_empty()) return empty();
    return Interval{-hi, -lo};
  }
};

}  // namespace radvar

#endif  // RADVAR_INTERVAL_HPP
