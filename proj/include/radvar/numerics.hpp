#ifndef RADVAR_NUMERICS_HPP
#define RADVAR_NUMERICS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace radvar {

/// Pairwise (cascade) summation: deterministic reduction order and far
/// better rounding than a running sum.
double pairwise_sum(std::span<const double> xs);

/// Largest x in [lo, hi] with pred(x) true, given pred monotone
/// (true then false). Requires pred(lo); returns lo if pred fails
/// immediately right of lo.
double bisect_sup(const std::function<bool(double)>& pred, double lo,
                  double hi, int iters = 200);

/// Smallest x in [lo, hi] with pred(x) true, given pred monotone
/// (false then true). Requires pred(hi).
double bisect_inf(const std::function<bool(double)>& pred, double lo,
                  double hi, int iters = 200);

}  // namespace radvar

#endif  // RADVAR_NUMERICS_HPP
