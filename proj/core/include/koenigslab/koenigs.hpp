#ifndef KOENIGSLAB_KOENIGS_HPP
#define KOENIGSLAB_KOENIGS_HPP

#include <vector>

#include "koenigslab/symbols.hpp"

namespace koenigslab {

struct KoenigsResult {
  TaylorSeries sigma;        // normalized so sigma(a) = 0, sigma'(a) = 1
  DiskPoint fixed_point;
  Cx multiplier;
  /// l2 norm of sigma o phi - multiplier * sigma over the leading
  /// order/2 + 1 coefficients; the tail half of the composition is
  /// dominated by truncation of sigma and says nothing.
  double residual;
  int iterations_used;       // 0 for the recurrence route
  std::vector<double> step_deltas;  // iterate route: successive differences
};

/// Koenigs eigenfunction by orbit renormalization: the limit of
/// (phi^{[n]} - a) / multiplier^n. Stops when successive iterates differ by
/// less than tol in max coefficient norm; the final series is renormalized
/// exactly. Throws domain_error when the symbol has no Schroeder model and
/// convergence_error when max_iter steps are not enough.
KoenigsResult koenigs_iterate(const SymbolSpec& s, int order,
                              double tol = 1e-13, int max_iter = 200);

/// Same eigenfunction through the triangular coefficient recurrence of the
/// recentered symbol psi(w) = phi(w + a) - a:
///   c_k = (sum_{i<k} c_i [w^k] psi^i) / (multiplier - multiplier^k).
/// Exact modulo rounding for polynomial recentred symbols; coefficient
/// growth of the recentred eigenfunction makes this route useful for
/// moderate |a| (the iterate route has no such restriction).
KoenigsResult koenigs_recurrence(const SymbolSpec& s, int order);

/// Powers sigma^0 = 1, sigma^1, ..., sigma^count at sigma's order.
std::vector<TaylorSeries> koenigs_sequence(const TaylorSeries& sigma, int count);

/// sigma / ||sigma||; usage_error on the zero series.
TaylorSeries renormalize_unit_norm(const TaylorSeries& sigma);

}  // namespace koenigslab

#endif  // KOENIGSLAB_KOENIGS_HPP
