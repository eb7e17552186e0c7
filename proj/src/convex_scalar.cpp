#include "radvar/convex_scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "radvar/numerics.hpp"

namespace radvar {
namespace detail {

namespace {
constexpr double kSlopeTol = 1e-12;
constexpr double kHuge = 1e280;
}  // namespace

double FnImpl::rightmost_min() const {
  const double D = domain_end();
  if (D == 0.0) return 0.0;
  if (deriv_plus(0.0) > 0.0) return 0.0;
  double hi = std::min(D, 1.0);
  while (hi < D && deriv_minus(hi) <= 0.0) {
    if (hi > kHuge) return kInf;
    hi = std::min(D, hi * 2.0);
  }
  if (deriv_minus(hi) <= 0.0) return hi;
  return bisect_sup([this](double x) { return x == 0.0 || deriv_minus(x) <= 0.0; },
                    0.0, hi);
}

Interval FnImpl::inverse_subgrad(double p) const {
  const double D = domain_end();
  if (D == 0.0) return Interval::point(0.0);

  double lo;
  if (deriv_plus(0.0) >= p) {
    lo = 0.0;
  } else {
    double bracket = std::min(D, 1.0);
    while (bracket < D && deriv_plus(bracket) < p) {
      if (bracket > kHuge) {
        fail(ErrorCode::OutsideDualDomain,
             "p exceeds every attained slope; f*(p) = +inf");
      }
      bracket = std::min(D, bracket * 2.0);
    }
    if (bracket >= D && deriv_plus(bracket) < p) {
      if (std::isinf(D))
        fail(ErrorCode::OutsideDualDomain,
             "p exceeds every attained slope; f*(p) = +inf");
      // Only the vertical part of the subgradient at the domain end reaches p.
      return Interval::point(D);
    }
    lo = bisect_inf([this, p](double x) { return deriv_plus(x) >= p; }, 0.0,
                    bracket);
  }

  double hi;
  if (!std::isinf(D) && deriv_minus(D) <= p) {
    hi = D;
  } else {
    double bracket = std::max(lo, std::min(D, 1.0));
    bool unbounded = false;
    while (bracket < D && deriv_minus(std::max(bracket, 1e-300)) <= p) {
      if (bracket > kHuge) {
        unbounded = true;
        break;
      }
      bracket = std::min(D, bracket * 2.0);
    }
    if (unbounded) {
      hi = kInf;
    } else {
      hi = bisect_sup(
          [this, p](double x) { return x == 0.0 || deriv_minus(x) <= p; }, lo,
          bracket);
    }
  }
  return Interval::of(lo, hi);
}

double FnImpl::prox_plus(double z, double t) const {
  const double D = domain_end();
  if (z <= t * deriv_plus(0.0)) return 0.0;
  double rm = rightmost_min();
  double hi = std::max(z, std::isinf(rm) ? z : rm);
  hi = std::min(hi, D);
  // sup{s : s + t f'_-(s) <= z}; the minimizer satisfies
  // z - s in t df(s) and the map s + t df(s) is strictly increasing.
  return bisect_sup(
      [this, z, t](double s) {
        return s == 0.0 || s + t * deriv_minus(s) <= z;
      },
      0.0, hi);
}

std::optional<ConvexScalar> FnImpl::exact_conjugate() const {
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Piecewise-linear kind
// ---------------------------------------------------------------------------

class PwlFn final : public FnImpl {
 public:
  PwlFn(std::vector<double> b, std::vector<double> v, double D)
      : b_(std::move(b)), v_(std::move(v)), D_(D) {
    const std::size_t m = b_.size();
    if (m == 0) fail(ErrorCode::BadDomain, "pwl needs at least one breakpoint");
    if (b_.front() != 0.0)
      fail(ErrorCode::BadDomain, "pwl breakpoints must start at 0");
    if (v_.size() != m)
      fail(ErrorCode::BadDomain, "breakpoints/values size mismatch");
    for (std::size_t i = 0; i < m; ++i) {
      if (!std::isfinite(b_[i]) || !std::isfinite(v_[i]))
        fail(ErrorCode::BadDomain, "pwl data must be finite");
      if (i + 1 < m && !(b_[i + 1] > b_[i]))
        fail(ErrorCode::BadDomain, "pwl breakpoints must be strictly increasing");
    }
    if (std::isnan(D_) || D_ < b_.back())
      fail(ErrorCode::BadDomain, "domain_end precedes the last breakpoint");
    lam_.resize(m, 0.0);  // lam_[i] is the slope on [b_{i-1}, b_i]; lam_[0] unused
    for (std::size_t i = 1; i < m; ++i) {
      lam_[i] = (v_[i] - v_[i - 1]) / (b_[i] - b_[i - 1]);
      if (i >= 2 && lam_[i] < lam_[i - 1] - kSlopeTol)
        fail(ErrorCode::NonConvexData, "slopes decrease beyond tolerance");
    }
    tail_ = m > 1 ? lam_.back() : 0.0;
  }

  double value(double s) const override {
    if (s > D_) return kInf;
    if (s >= b_.back()) return v_.back() + tail_ * (s - b_.back());
    auto it = std::upper_bound(b_.begin(), b_.end(), s);
    std::size_t i = static_cast<std::size_t>(it - b_.begin());  // b_[i-1] <= s < b_[i]
    return v_[i - 1] + lam_[i] * (s - b_[i - 1]);
  }

  double deriv_plus(double s) const override {
    if (s >= D_) return kInf;
    if (s >= b_.back()) return tail_;
    auto it = std::upper_bound(b_.begin(), b_.end(), s);
    std::size_t i = static_cast<std::size_t>(it - b_.begin());
    return lam_[i];
  }

  double deriv_minus(double s) const override {
    if (s > D_) return kInf;
    if (s > b_.back()) return tail_;
    auto it = std::lower_bound(b_.begin(), b_.end(), s);
    std::size_t i = static_cast<std::size_t>(it - b_.begin());
    if (i < b_.size() && b_[i] == s) {
      return i == 0 ? lam_[std::min<std::size_t>(1, lam_.size() - 1)] : lam_[i];
    }
    return lam_[i];  // b_[i-1] < s < b_[i]
  }

  double domain_end() const override { return D_; }

  double asymptotic_slope() const override {
    return std::isinf(D_) ? tail_ : kInf;
  }

  double rightmost_min() const override {
    const std::size_t m = b_.size();
    double pos = 0.0;
    for (std::size_t i = 1; i < m; ++i)
      if (lam_[i] <= 0.0) pos = b_[i];
    if (m >= 1 && tail_ < 0.0) pos = D_;
    if (tail_ == 0.0 && b_.back() > pos && m > 1 && lam_.back() <= 0.0)
      pos = b_.back();
    return pos;
  }

  Interval inverse_subgrad(double p) const override {
    const std::size_t m = b_.size();
    // lo: first point whose right-side slope reaches p
    double lo = kInf, hi = -kInf;
    bool found_lo = false;
    for (std::size_t i = 1; i < m; ++i) {
      if (lam_[i] >= p) {
        lo = b_[i - 1];
        found_lo = true;
        break;
      }
    }
    if (!found_lo) {
      if (m >= 1 && tail_ >= p && m > 1) {
        lo = b_.back();
        found_lo = true;
      } else if (m == 1 && 0.0 >= p) {  // constant on [0, D]
        lo = 0.0;
        found_lo = true;
      }
    }
    if (!found_lo) {
      if (std::isinf(D_))
        fail(ErrorCode::OutsideDualDomain, "p exceeds the terminal slope");
      return Interval::point(D_);
    }
    // hi: last point whose left-side slope does not exceed p
    hi = 0.0;
    for (std::size_t i = 1; i < m; ++i)
      if (lam_[i] <= p) hi = b_[i];
    double tail_slope = m > 1 ? tail_ : 0.0;
    if (tail_slope <= p) hi = D_;  // kInf when D_ is infinite
    return Interval::of(lo, std::max(lo, hi));
  }

  double prox_plus(double z, double t) const override {
    if (z <= t * deriv_plus(0.0)) return 0.0;
    const std::size_t m = b_.size();
    // Beyond the last breakpoint?
    if (m == 1 || b_.back() + t * tail_ <= z)
      return std::min(std::max(z - t * tail_, b_.back()), D_);
    // Find the first kink b_i with b_i + t*lam_i >= z; the solution lies in
    // segment i (interior or at its left kink).
    std::size_t lo = 1, hi = m - 1, idx = m - 1;
    while (lo <= hi) {
      std::size_t mid = (lo + hi) / 2;
      if (b_[mid] + t * lam_[mid] >= z) {
        idx = mid;
        if (mid == 1) break;
        hi = mid - 1;
      } else {
        lo = mid + 1;
      }
    }
    double s = z - t * lam_[idx];
    return std::clamp(s, b_[idx - 1], b_[idx]);
  }

  std::optional<ConvexScalar> exact_conjugate() const override;

  bool is_pwl() const override { return true; }
  std::span<const double> breakpoints() const override { return b_; }
  std::span<const double> knot_values() const override { return v_; }

  std::vector<double> b_, v_, lam_;
  double D_, tail_;
};

std::optional<ConvexScalar> PwlFn::exact_conjugate() const {
  const std::size_t m = b_.size();
  std::vector<double> pb, pv;
  double Dstar = kInf;

  if (tail_ < 0.0 && std::isinf(D_))
    fail(ErrorCode::BadDomain, "conjugate of a function unbounded below");

  if (tail_ < 0.0) {
    // Minimum at the (finite) domain end; f* is the single ray of slope D.
    double fD = value(D_);
    pb = {0.0, 1.0};
    pv = {-fD, -fD + D_};
    return ConvexScalar::pwl(std::move(pb), std::move(pv), kInf, "pwl");
  }

  // Rightmost minimizing breakpoint.
  std::size_t k0 = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (lam_[i] <= 0.0) k0 = i;
  pb.push_back(0.0);
  pv.push_back(-v_[k0]);

  for (std::size_t i = k0 + 1; i < m; ++i) {
    bool run_end = (i + 1 == m) || (lam_[i + 1] != lam_[i]);
    if (!run_end) continue;
    if (lam_[i] > pb.back()) {
      pb.push_back(lam_[i]);
      pv.push_back(lam_[i] * b_[i] - v_[i]);
    }
  }

  if (std::isinf(D_)) {
    Dstar = (m > 1) ? tail_ : 0.0;
    Dstar = std::max(Dstar, pb.back());
  } else {
    double fD = value(D_);
    double sigma_t = (m > 1) ? tail_ : 0.0;
    if (sigma_t > pb.back()) {
      pb.push_back(sigma_t);
      pv.push_back(sigma_t * D_ - fD);
    }
    pb.push_back(pb.back() + 1.0);
    pv.push_back(pv.back() + D_);
    Dstar = kInf;
  }
  return ConvexScalar::pwl(std::move(pb), std::move(pv), Dstar, "pwl");
}

// ---------------------------------------------------------------------------
// Power kind: coef * s^exponent
// ---------------------------------------------------------------------------

class PowerFn final : public FnImpl {
 public:
  PowerFn(double coef, double expo, double D) : a_(coef), q_(expo), D_(D) {
    if (!(a_ > 0.0) || !std::isfinite(a_))
      fail(ErrorCode::BadDomain, "power coefficient must be positive");
    if (!(q_ >= 1.0) || !std::isfinite(q_))
      fail(ErrorCode::BadDomain, "power exponent must be >= 1");
    if (std::isnan(D_) || D_ < 0.0) fail(ErrorCode::BadDomain, "bad domain_end");
  }

  double value(double s) const override {
    if (s > D_) return kInf;
    return a_ * std::pow(s, q_);
  }
  double deriv_plus(double s) const override {
    if (s >= D_) return kInf;
    return deriv(s);
  }
  double deriv_minus(double s) const override {
    if (s > D_) return kInf;
    return deriv(s);
  }
  double domain_end() const override { return D_; }
  double asymptotic_slope() const override {
    if (!std::isinf(D_)) return kInf;
    return q_ > 1.0 ? kInf : a_;
  }
  double rightmost_min() const override { return 0.0; }

  Interval inverse_subgrad(double p) const override {
    if (q_ == 1.0) {
      if (p < a_) return Interval::point(0.0);
      if (p == a_) return Interval::of(0.0, D_);
      if (std::isinf(D_))
        fail(ErrorCode::OutsideDualDomain, "p exceeds the linear slope");
      return Interval::point(D_);
    }
    double s = std::pow(p / (a_ * q_), 1.0 / (q_ - 1.0));
    if (s >= D_) return Interval::point(D_);
    return Interval::point(s);
  }

  double prox_plus(double z, double t) const override {
    double s;
    if (q_ == 1.0) {
      s = std::max(0.0, z - t * a_);
    } else if (q_ == 2.0) {
      s = z / (1.0 + 2.0 * t * a_);
    } else {
      // s + t a q s^{q-1} = z, monotone in s
      s = bisect_sup(
          [this, z, t](double x) { return x + t * deriv(x) <= z; }, 0.0, z);
    }
    return std::min(s, D_);
  }

  std::optional<ConvexScalar> exact_conjugate() const override {
    if (!std::isinf(D_)) return std::nullopt;
    if (q_ == 1.0) {
      // conjugate of a|s| is the indicator of [-a, a]
      return ConvexScalar::pwl({0.0, a_}, {0.0, 0.0}, a_, "ind");
    }
    double qs = q_ / (q_ - 1.0);
    double coef = (1.0 - 1.0 / q_) * std::pow(a_ * q_, -1.0 / (q_ - 1.0));
    return ConvexScalar::power(coef, qs);
  }

 private:
  double deriv(double s) const {
    if (q_ == 1.0) return a_;
    return a_ * q_ * std::pow(s, q_ - 1.0);
  }
  double a_, q_, D_;
};

// ---------------------------------------------------------------------------
// s log(1+s) kind
// ---------------------------------------------------------------------------

class SLogFn final : public FnImpl {
 public:
  explicit SLogFn(double coef) : a_(coef) {
    if (!(a_ > 0.0)) fail(ErrorCode::BadDomain, "slog coefficient must be positive");
  }
  double value(double s) const override { return a_ * s * std::log1p(s); }
  double deriv_plus(double s) const override { return deriv(s); }
  double deriv_minus(double s) const override { return deriv(s); }
  double domain_end() const override { return kInf; }
  double asymptotic_slope() const override { return kInf; }
  double rightmost_min() const override { return 0.0; }

 private:
  double deriv(double s) const { return a_ * (std::log1p(s) + s / (1.0 + s)); }
  double a_;
};

// ---------------------------------------------------------------------------
// max(base - c, 0), vanishing on [0, x0]
// ---------------------------------------------------------------------------

class HingeFn final : public FnImpl {
 public:
  HingeFn(ConvexScalar base, double c, double x0)
      : base_(std::move(base)), c_(c), x0_(x0) {
    if (!(x0_ >= 0.0)) fail(ErrorCode::BadDomain, "hinge start must be >= 0");
  }
  double value(double s) const override {
    if (s <= x0_) return 0.0;
    double v = base_.value(s);
    return std::isinf(v) ? v : std::max(v - c_, 0.0);
  }
  double deriv_plus(double s) const override {
    if (s < x0_) return 0.0;
    return std::max(0.0, base_.impl().deriv_plus(s));
  }
  double deriv_minus(double s) const override {
    if (s <= x0_) return 0.0;
    return std::max(0.0, base_.impl().deriv_minus(s));
  }
  double domain_end() const override { return base_.domain_end(); }
  double asymptotic_slope() const override { return base_.asymptotic_slope(); }
  double rightmost_min() const override { return x0_; }

  Interval inverse_subgrad(double p) const override {
    if (p == 0.0) return Interval::of(0.0, x0_);
    Interval base_iv = base_.impl().inverse_subgrad(p);
    return Interval::of(std::max(base_iv.lo, x0_), std::max(base_iv.hi, x0_));
  }

 private:
  ConvexScalar base_;
  double c_, x0_;
};

// ---------------------------------------------------------------------------
// Nonnegative linear combination
// ---------------------------------------------------------------------------

class LinCombFn final : public FnImpl {
 public:
  explicit LinCombFn(std::vector<std::pair<double, ConvexScalar>> terms)
      : terms_(std::move(terms)) {
    D_ = kInf;
    for (auto& [w, f] : terms_) {
      if (!(w >= 0.0)) fail(ErrorCode::BadDomain, "weights must be nonnegative");
      D_ = std::min(D_, f.domain_end());
    }
  }
  double value(double s) const override {
    if (s > D_) return kInf;
    double acc = 0.0;
    for (auto& [w, f] : terms_) {
      double v = f.value(s);
      if (std::isinf(v)) return kInf;
      acc += w * v;
    }
    return acc;
  }
  double deriv_plus(double s) const override {
    if (s >= D_) return kInf;
    double acc = 0.0;
    for (auto& [w, f] : terms_) acc += w * f.impl().deriv_plus(s);
    return acc;
  }
  double deriv_minus(double s) const override {
    if (s > D_) return kInf;
    double acc = 0.0;
    for (auto& [w, f] : terms_) acc += w * f.impl().deriv_minus(s);
    return acc;
  }
  double domain_end() const override { return D_; }
  double asymptotic_slope() const override {
    if (!std::isinf(D_)) return kInf;
    double acc = 0.0;
    for (auto& [w, f] : terms_) {
      double a = f.asymptotic_slope();
      if (std::isinf(a)) return kInf;
      acc += w * a;
    }
    return acc;
  }

 private:
  std::vector<std::pair<double, ConvexScalar>> terms_;
  double D_;
};

// ---------------------------------------------------------------------------
// Spliced (glued) kind: head on [0,cut], tangent line + extra beyond
// ---------------------------------------------------------------------------

class SplicedFn final : public FnImpl {
 public:
  SplicedFn(ConvexScalar head, double cut, double tv, double ts,
            ConvexScalar extra)
      : head_(std::move(head)),
        cut_(cut),
        tv_(tv),
        ts_(ts),
        extra_(std::move(extra)) {
    if (!(cut_ >= 0.0) || cut_ > head_.domain_end())
      fail(ErrorCode::InconsistentParams, "splice point outside the head domain");
    if (std::abs(extra_.value(cut_)) > 1e-9)
      fail(ErrorCode::InconsistentParams, "extra term must vanish at the splice");
    if (cut_ > 0.0 &&
        head_.impl().deriv_minus(cut_) >
            ts_ + extra_.impl().deriv_plus(cut_) + 1e-9)
      fail(ErrorCode::InconsistentParams, "splice would break convexity");
  }
  double value(double s) const override {
    if (s <= cut_) return head_.value(s);
    double e = extra_.value(s);
    if (std::isinf(e)) return kInf;
    return tv_ + ts_ * (s - cut_) + e;
  }
  double deriv_plus(double s) const override {
    if (s < cut_) return head_.impl().deriv_plus(s);
    if (s >= extra_.domain_end()) return kInf;
    return ts_ + extra_.impl().deriv_plus(s);
  }
  double deriv_minus(double s) const override {
    if (s <= cut_ && cut_ > 0.0) return head_.impl().deriv_minus(s);
    return ts_ + extra_.impl().deriv_minus(std::max(s, cut_));
  }
  double domain_end() const override { return extra_.domain_end(); }
  double asymptotic_slope() const override {
    double a = extra_.asymptotic_slope();
    return std::isinf(a) ? a : ts_ + a;
  }

 private:
  ConvexScalar head_;
  double cut_, tv_, ts_;
  ConvexScalar extra_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// ConvexScalar factories
// ---------------------------------------------------------------------------

ConvexScalar ConvexScalar::pwl(std::vector<double> breakpoints,
                               std::vector<double> values, double domain_end,
                               std::string label) {
  auto impl = std::make_shared<detail::PwlFn>(std::move(breakpoints),
                                              std::move(values), domain_end);
  return ConvexScalar(std::move(impl), std::move(label));
}

ConvexScalar ConvexScalar::power(double coef, double exponent,
                                 double domain_end) {
  std::ostringstream os;
  os << coef << "*s^" << exponent;
  return ConvexScalar(std::make_shared<detail::PowerFn>(coef, exponent, domain_end),
                      os.str());
}

ConvexScalar ConvexScalar::absval() {
  return ConvexScalar(std::make_shared<detail::PowerFn>(1.0, 1.0, kInf), "|s|");
}

ConvexScalar ConvexScalar::slog(double coef) {
  std::ostringstream os;
  os << coef << "*s*log(1+s)";
  return ConvexScalar(std::make_shared<detail::SLogFn>(coef), os.str());
}

ConvexScalar ConvexScalar::constant(double c) {
  return pwl({0.0}, {c}, kInf, "const");
}

ConvexScalar ConvexScalar::hinge_shift(ConvexScalar base, double shift,
                                       double start) {
  if (base.is_pwl()) {
    // Exact piecewise-linear hinge: zero to `start`, base - shift beyond.
    std::vector<double> nb{0.0}, nv{0.0};
    if (start > 0.0) {
      nb.push_back(start);
      nv.push_back(0.0);
    }
    auto bs = base.breakpoints();
    for (std::size_t i = 0; i < bs.size(); ++i) {
      if (bs[i] > start) {
        nb.push_back(bs[i]);
        nv.push_back(base.value(bs[i]) - shift);
      }
    }
    return pwl(std::move(nb), std::move(nv), base.domain_end(),
               base.label() + "_hinge");
  }
  auto label = base.label() + "_hinge";
  return ConvexScalar(
      std::make_shared<detail::HingeFn>(std::move(base), shift, start), label);
}

namespace {

ConvexScalar pwl_lincomb(const ConvexScalar& a, double wa,
                         const ConvexScalar& b, double wb) {
  double D = std::min(a.domain_end(), b.domain_end());
  std::vector<double> knots;
  auto push_from = [&](std::span<const double> bs) {
    for (double x : bs)
      if (x <= D) knots.push_back(x);
  };
  push_from(a.breakpoints());
  push_from(b.breakpoints());
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  std::vector<double> vals(knots.size());
  for (std::size_t i = 0; i < knots.size(); ++i)
    vals[i] = wa * a.value(knots[i]) + wb * b.value(knots[i]);
  return ConvexScalar::pwl(std::move(knots), std::move(vals), D,
                           a.label() + "+" + b.label());
}

}  // namespace

ConvexScalar ConvexScalar::scaled(ConvexScalar f, double w) {
  if (!(w >= 0.0)) fail(ErrorCode::BadDomain, "scale weight must be nonnegative");
  if (w == 1.0) return f;
  if (f.is_pwl()) {
    auto bs = f.breakpoints();
    auto vs = f.knot_values();
    std::vector<double> nb(bs.begin(), bs.end());
    std::vector<double> nv(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) nv[i] = w * vs[i];
    return pwl(std::move(nb), std::move(nv), f.domain_end(), f.label());
  }
  auto label = f.label();
  return ConvexScalar(std::make_shared<detail::LinCombFn>(
                          std::vector<std::pair<double, ConvexScalar>>{
                              {w, std::move(f)}}),
                      label);
}

ConvexScalar ConvexScalar::weighted_sum(ConvexScalar a, double wa,
                                        ConvexScalar b, double wb) {
  if (wb == 0.0) return scaled(std::move(a), wa);
  if (wa == 0.0) return scaled(std::move(b), wb);
  if (a.is_pwl() && b.is_pwl()) return pwl_lincomb(a, wa, b, wb);
  auto label = a.label() + "+" + b.label();
  return ConvexScalar(std::make_shared<detail::LinCombFn>(
                          std::vector<std::pair<double, ConvexScalar>>{
                              {wa, std::move(a)}, {wb, std::move(b)}}),
                      label);
}

ConvexScalar ConvexScalar::spliced(ConvexScalar head, double cut,
                                   double tangent_value, double tangent_slope,
                                   ConvexScalar extra) {
  auto label = head.label() + "~glued";
  return ConvexScalar(std::make_shared<detail::SplicedFn>(
                          std::move(head), cut, tangent_value, tangent_slope,
                          std::move(extra)),
                      label);
}

// ---------------------------------------------------------------------------
// ConvexScalar queries
// ---------------------------------------------------------------------------

double ConvexScalar::value(double s) const { return impl_->value(std::abs(s)); }

double ConvexScalar::domain_end() const { return impl_->domain_end(); }

double ConvexScalar::asymptotic_slope() const {
  return impl_->asymptotic_slope();
}

double ConvexScalar::rightmost_min() const { return impl_->rightmost_min(); }

double ConvexScalar::min_value() const {
  double rm = impl_->rightmost_min();
  if (std::isinf(rm)) return -kInf;
  return impl_->value(rm);
}

bool ConvexScalar::is_pwl() const { return impl_->is_pwl(); }

std::span<const double> ConvexScalar::breakpoints() const {
  return impl_->breakpoints();
}

std::span<const double> ConvexScalar::knot_values() const {
  return impl_->knot_values();
}

ConvexScalar ConvexScalar::with_label(std::string label) const {
  ConvexScalar out = *this;
  out.label_ = std::move(label);
  return out;
}

double ConvexScalar::prox(double z, double t) const {
  double s = impl_->prox_plus(std::abs(z), t);
  return z < 0.0 ? -s : s;
}

// ---------------------------------------------------------------------------
// Module operations
// ---------------------------------------------------------------------------

ConvexScalar make_pwl(std::vector<double> breakpoints,
                      std::vector<double> values, double domain_end) {
  return ConvexScalar::pwl(std::move(breakpoints), std::move(values),
                           domain_end);
}

Interval subgradient(const ConvexScalar& f, double x) {
  const double ax = std::abs(x);
  const double D = f.domain_end();
  if (ax > D)
    fail(ErrorCode::OutsideDomain, "f(x) = +inf at the queried point");
  Interval iv;
  if (D == 0.0) {
    iv = Interval::of(-kInf, kInf);
  } else if (ax == 0.0) {
    double d = f.impl().deriv_plus(0.0);
    iv = Interval::of(-d, d);
  } else {
    double lo = f.impl().deriv_minus(ax);
    double hi = (ax == D) ? kInf : f.impl().deriv_plus(ax);
    iv = Interval::of(lo, hi);
  }
  return x < 0.0 ? iv.negated() : iv;
}

Interval inverse_subgradient(const ConvexScalar& f, double p) {
  return f.impl().inverse_subgrad(std::abs(p));
}

ConvexScalar conjugate(const ConvexScalar& f) {
  if (auto exact = f.impl().exact_conjugate())
    return exact->with_label(f.label() + "*");

  // Sampled fallback for composite kinds: sample to PWL, then conjugate
  // exactly. Only the sampling step is approximate.
  const double D = f.domain_end();
  double S;
  if (std::isinf(D)) {
    S = 1.0;
    while (S < 1e6 && f.impl().deriv_plus(S) < 100.0) S *= 2.0;
  } else {
    S = D;
  }
  const int n = 2048;
  std::vector<double> bs(n + 1), vs(n + 1);
  for (int i = 0; i <= n; ++i) {
    bs[i] = S * i / n;
    vs[i] = f.value(bs[i]);
  }
  // Lower hull of the samples guards against rounding-induced slope dips.
  std::vector<double> hb, hv;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    while (hb.size() >= 2) {
      double s1 = (hv.back() - hv[hv.size() - 2]) / (hb.back() - hb[hb.size() - 2]);
      double s2 = (vs[i] - hv.back()) / (bs[i] - hb.back());
      if (s2 < s1) {
        hb.pop_back();
        hv.pop_back();
      } else {
        break;
      }
    }
    hb.push_back(bs[i]);
    hv.push_back(vs[i]);
  }
  ConvexScalar sampled =
      ConvexScalar::pwl(std::move(hb), std::move(hv), std::isinf(D) ? S : D);
  return conjugate(sampled).with_label(f.label() + "*");
}

}  // namespace radvar
