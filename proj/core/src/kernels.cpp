#include "koenigslab/kernels.hpp"

#include <cmath>

namespace koenigslab {

DiskPoint::DiskPoint(Cx value) : value_(value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw domain_error("disk point is not finite");
  if (std::abs(value) >= 1.0)
    throw domain_error("point is not strictly inside the unit disk");
}

TaylorSeries kernel_series(DiskPoint a, int n, int order) {
  if (n < 0 || n > order) throw usage_error("derivative order outside truncation order");
  if (n > 170) throw usage_error("derivative order too large: n! overflows double");
  const Cx ac = std::conj(a.value());
  std::vector<Cx> c(order + 1, Cx(0.0, 0.0));
  // Falling-factorial recurrence along m keeps each coefficient one multiply
  // away from the previous one: c_{m+1} = c_m * conj(a) * (m+1)/(m+1-n).
  Cx cur(1.0, 0.0);
  for (int t = 2; t <= n; ++t) cur *= static_cast<double>(t);  // n!
  for (int m = n; m <= order; ++m) {
    c[m] = cur;
    cur *= ac * (static_cast<double>(m + 1) / static_cast<double>(m + 1 - n));
  }
  return TaylorSeries(std::move(c));
}

KernelClosedForms kernel_closed_forms(double a) {
  if (!(a > 0.0 && a < 1.0))
    throw domain_error("closed forms require a real parameter in (0,1)");
  const double one_minus = 1.0 - a * a;
  KernelClosedForms out;
  out.k1_at_a = a / (one_minus * one_minus);
  out.norm_k = 1.0 / std::sqrt(one_minus);
  out.norm_k1 = std::sqrt(1.0 + a * a) / (one_minus * std::sqrt(one_minus));
  return out;
}

}  // namespace koenigslab
