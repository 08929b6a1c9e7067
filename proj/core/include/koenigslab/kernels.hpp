#ifndef KOENIGSLAB_KERNELS_HPP
#define KOENIGSLAB_KERNELS_HPP

#include "koenigslab/series.hpp"

namespace koenigslab {

/// A point strictly inside the unit disk; the constraint is enforced at
/// construction so downstream code never re-checks it.
class DiskPoint {
 public:
  explicit DiskPoint(Cx value);
  Cx value() const noexcept { return value_; }
  double abs() const { return std::abs(value_); }

 private:
  Cx value_;
};

/// Truncation of the reproducing kernel for the n-th derivative functional
/// at a: coefficient of z^m is m!/(m-n)! * conj(a)^(m-n) for m >= n, zero
/// below. n = 0 gives the point-evaluation kernel 1/(1 - conj(a) z).
///
/// n is capped at 170 on top of n <= order: the leading coefficient is n!,
/// which overflows double beyond that.
TaylorSeries kernel_series(DiskPoint a, int n, int order);

/// Closed forms for the quantities the consistency checks compare against,
/// at a real parameter a in (0,1):
///   k1_at_a  = a / (1 - a^2)^2      derivative kernel evaluated at a
///   norm_k   = 1 / sqrt(1 - a^2)    norm of the evaluation kernel
///   norm_k1  = sqrt(1 + a^2) / (1 - a^2)^(3/2)
/// All three are positive.
struct KernelClosedForms {
  double k1_at_a;
  double norm_k;
  double norm_k1;
};

KernelClosedForms kernel_closed_forms(double a);

}  // namespace koenigslab

#endif  // KOENIGSLAB_KERNELS_HPP
