#ifndef RADVAR_CONVEX_SCALAR_HPP
#define RADVAR_CONVEX_SCALAR_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radvar/errors.hpp"
#include "radvar/interval.hpp"

namespace radvar {

class ConvexScalar;

namespace detail {

/// One-sided representation of a closed convex function f on [0, +inf),
/// +inf beyond domain_end(), with the even extension z |-> f(|z|) applied
/// by the public wrappers. Immutable after construction.
class FnImpl {
 public:
  virtual ~FnImpl() = default;

  /// f(s) for s >= 0; +inf for s > domain_end(). Lower semicontinuous at
  /// the domain end (the value there is the limit from the left).
  virtual double value(double s) const = 0;
  /// Right derivative, defined on [0, D); +inf at and beyond D.
  virtual double deriv_plus(double s) const = 0;
  /// Left derivative, defined on (0, D].
  virtual double deriv_minus(double s) const = 0;
  virtual double domain_end() const = 0;
  /// lim f(s)/s; +inf for superlinear growth or a finite domain.
  virtual double asymptotic_slope() const = 0;
  /// Largest minimizer of f on [0, D].
  virtual double rightmost_min() const;
  /// {x >= 0 : p in df(x)} for p >= 0. Default: monotone bisection on the
  /// one-sided derivatives. Throws OutsideDualDomain when f*(p) = +inf.
  virtual Interval inverse_subgrad(double p) const;
  /// argmin_s f(s) + (s - z)^2 / (2 t) over s >= 0, z >= 0, t > 0.
  /// Default: bisection on the optimality inclusion z - s in t*df(s).
  virtual double prox_plus(double z, double t) const;
  /// Exact conjugate when a closed form exists.
  virtual std::optional<ConvexScalar> exact_conjugate() const;
  virtual bool is_pwl() const { return false; }
  virtual std::span<const double> breakpoints() const { return {}; }
  virtual std::span<const double> knot_values() const { return {}; }
};

}  // namespace detail

/// A one-variable closed convex function on [0, +inf) with exact subgradient
/// intervals. Queries at negative arguments use the even extension
/// s |-> f(|s|). Value-semantic immutable handle; cheap to copy and safe to
/// share across threads.
class ConvexScalar {
 public:
  /// Piecewise-linear: breakpoints 0 = b0 < ... < bm, node values, linear
  /// in between, the last slope extended to domain_end, +inf beyond.
  static ConvexScalar pwl(std::vector<double> breakpoints,
                          std::vector<double> values, double domain_end = kInf,
                          std::string label = "pwl");
  /// coef * s^exponent on [0, domain_end], coef > 0, exponent >= 1.
  static ConvexScalar power(double coef, double exponent,
                            double domain_end = kInf);
  /// |s| (even extension of s).
  static ConvexScalar absval();
  /// coef * s * log(1 + s): superlinear with subquadratic growth.
  static ConvexScalar slog(double coef = 1.0);
  static ConvexScalar constant(double c);
  /// max(base - shift, 0); `start` is the largest s with base(s) <= shift,
  /// so the result vanishes exactly on [0, start].
  static ConvexScalar hinge_shift(ConvexScalar base, double shift,
                                  double start);
  static ConvexScalar scaled(ConvexScalar f, double w);
  static ConvexScalar weighted_sum(ConvexScalar a, double wa, ConvexScalar b,
                                   double wb);
  /// head on [0, cut]; tangent_value + tangent_slope*(s - cut) + extra(s)
  /// for s >= cut. Requires head'_-(cut) <= tangent_slope and continuity at
  /// the junction: head(cut) == tangent_value, extra(cut) == 0.
  static ConvexScalar spliced(ConvexScalar head, double cut,
                              double tangent_value, double tangent_slope,
                              ConvexScalar extra);

  ConvexScalar() = default;
  bool valid() const { return impl_ != nullptr; }

  /// Even extension: f(|s|); +inf outside the domain.
  double value(double s) const;
  double operator()(double s) const { return value(s); }

  double domain_end() const;
  double asymptotic_slope() const;
  double rightmost_min() const;
  double min_value() const;
  bool is_pwl() const;
  std::span<const double> breakpoints() const;
  std::span<const double> knot_values() const;
  const std::string& label() const { return label_; }
  ConvexScalar with_label(std::string label) const;

  /// Proximal map of the even extension: argmin f(|s|) + (s-z)^2/(2t).
  double prox(double z, double t) const;

  bool same_object(const ConvexScalar& other) const {
    return impl_ == other.impl_;
  }

  const detail::FnImpl& impl() const { return *impl_; }

 private:
  explicit ConvexScalar(std::shared_ptr<const detail::FnImpl> impl,
                        std::string label)
      : impl_(std::move(impl)), label_(std::move(label)) {}

  std::shared_ptr<const detail::FnImpl> impl_;
  std::string label_;

  friend ConvexScalar conjugate(const ConvexScalar&);
};

/// Validated piecewise-linear constructor. Rejects non-convex data
/// (successive slopes decreasing beyond 1e-12) and domain_end < last
/// breakpoint.
ConvexScalar make_pwl(std::vector<double> breakpoints,
                      std::vector<double> values, double domain_end = kInf);

/// [f'_-(x), f'_+(x)] of the even extension. At x = 0 this is
/// [-f'_+(0), f'_+(0)]; at a finite domain end with finite value the upper
/// end is +inf. Throws OutsideDomain when f(x) = +inf.
Interval subgradient(const ConvexScalar& f, double x);

/// Exact Fenchel-Legendre transform of the even extension,
/// f*(p) = sup_x {p x - f(|x|)}, restricted to p >= 0 (f* is even).
/// Piecewise-linear input gives piecewise-linear output in linear time by
/// slope/breakpoint duality; catalog kinds carry closed forms where they
/// exist and are sampled to PWL otherwise.
ConvexScalar conjugate(const ConvexScalar& f);

/// df*(p) = {x >= 0 : p in df(x)}; p < 0 reduces to |p| by evenness.
/// Throws OutsideDualDomain when f*(p) = +inf.
Interval inverse_subgradient(const ConvexScalar& f, double p);

}  // namespace radvar

#endif  // RADVAR_CONVEX_SCALAR_HPP
