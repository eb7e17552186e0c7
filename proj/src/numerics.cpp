#include "radvar/numerics.hpp"

#include <cmath>

namespace radvar {

namespace {

double pairwise_block(const double* xs, std::size_t n) {
  if (n <= 8) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += xs[i];
    return acc;
  }
  std::size_t half = n / 2;
  return pairwise_block(xs, half) + pairwise_block(xs + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> xs) {
  return pairwise_block(xs.data(), xs.size());
}

double bisect_sup(const std::function<bool(double)>& pred, double lo,
                  double hi, int iters) {
  if (!(hi > lo)) return lo;
  if (pred(hi)) return hi;
  for (int k = 0; k < iters; ++k) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

double bisect_inf(const std::function<bool(double)>& pred, double lo,
                  double hi, int iters) {
  if (!(hi > lo)) return hi;
  if (pred(lo)) return lo;
  for (int k = 0; k < iters; ++k) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace radvar
