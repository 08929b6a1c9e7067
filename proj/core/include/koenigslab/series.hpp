#ifndef KOENIGSLAB_SERIES_HPP
#define KOENIGSLAB_SERIES_HPP

#include <complex>
#include <vector>

#include "koenigslab/errors.hpp"

namespace koenigslab {

using Cx = std::complex<double>;

/// Default truncation order N. Every series in play here has geometrically
/// decaying tails well inside the disk, so this order puts truncation error
/// far below the tolerances the checks run at.
inline constexpr int kDefaultOrder = 256;

/// Composition needs the constant term of the inner series strictly inside
/// the disk; the margin keeps Horner accumulation away from the boundary
/// blow-up of kernel-type series.
inline constexpr double kComposeMargin = 1e-9;

/// Polynomial truncation of a power series on the unit disk.
///
/// Coefficient of z^k lives at index k, 0 <= k <= order. The order is part
/// of the value: binary operations demand equal orders rather than silently
/// promoting, so truncation error stays where the caller put it. All
/// coefficients are finite; construction rejects NaN/Inf.
class TaylorSeries {
 public:
  explicit TaylorSeries(std::vector<Cx> coeffs);

  static TaylorSeries zero(int order);
  static TaylorSeries constant(Cx value, int order);
  /// c0 + c1*z padded with zeros.
  static TaylorSeries linear(Cx c0, Cx c1, int order);
  /// z^k.
  static TaylorSeries monomial(int k, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int size() const noexcept { return static_cast<int>(coeffs_.size()); }
  Cx coeff(int k) const;
  const std::vector<Cx>& coeffs() const noexcept { return coeffs_; }

  /// Copy cut or zero-padded to a new order.
  TaylorSeries truncated(int new_order) const;

 private:
  std::vector<Cx> coeffs_;
};

TaylorSeries add(const TaylorSeries& f, const TaylorSeries& g);
TaylorSeries sub(const TaylorSeries& f, const TaylorSeries& g);
TaylorSeries scale(const TaylorSeries& f, Cx c);

/// Cauchy product truncated back to the shared order. Coefficients up to the
/// order are exact (in exact arithmetic): dropped tail terms never feed back.
TaylorSeries mul(const TaylorSeries& f, const TaylorSeries& g);

/// Formal derivative at the same truncation order (top coefficient -> 0).
TaylorSeries differentiate(const TaylorSeries& f);

/// Horner evaluation, |z| < 1 enforced.
Cx evaluate(const TaylorSeries& f, Cx z);

/// f(phi(z)) truncated to the shared order. Requires
/// |phi(0)| < 1 - kComposeMargin. O(order^3); for repeated composition
/// against one inner series use PowerTable.
TaylorSeries compose(const TaylorSeries& f, const TaylorSeries& phi);

/// Hardy-space pairing sum_k f_k conj(g_k), accumulated in ascending index
/// order so results are bit-reproducible.
Cx inner_product(const TaylorSeries& f, const TaylorSeries& g);
double norm(const TaylorSeries& f);

double max_abs_coeff(const TaylorSeries& f);
/// l2 norm of the first `count` coefficients.
double head_norm(const TaylorSeries& f, int count);

/// Precomputed powers phi^0..phi^order of a fixed series. Costs one
/// O(order^3) pass up front; afterwards apply() composes any f with phi in
/// O(order^2), which is what makes orbit iteration and operator matrix
/// assembly affordable. Powers are plain truncated products, so the table
/// itself has no self-map requirement; apply() checks the composition margin.
class PowerTable {
 public:
  explicit PowerTable(const TaylorSeries& base);

  int order() const noexcept { return order_; }
  const TaylorSeries& power(int j) const;

  /// f composed with the base series.
  TaylorSeries apply(const TaylorSeries& f) const;

 private:
  int order_;
  Cx base0_;
  std::vector<TaylorSeries> powers_;
};

}  // namespace koenigslab

#endif  // KOENIGSLAB_SERIES_HPP
