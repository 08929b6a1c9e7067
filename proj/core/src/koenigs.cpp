#include "koenigslab/koenigs.hpp"

#include <cmath>
#include <limits>

namespace koenigslab {

namespace {

// Pin the two normalization conditions exactly: they are what both routes
// and all downstream comparisons agree on.
TaylorSeries renormalize_at_fixed_point(TaylorSeries sigma, Cx a) {
  sigma = sub(sigma, TaylorSeries::constant(evaluate(sigma, a), sigma.order()));
  const Cx d = evaluate(differentiate(sigma), a);
  if (std::abs(d) < 1e-8)
    throw convergence_error("eigenfunction derivative degenerated at the fixed point",
                            std::abs(d));
  return scale(sigma, Cx(1.0, 0.0) / d);
}

double half_block_residual(const TaylorSeries& sigma, const PowerTable& table, Cx lambda) {
  const TaylorSeries resid = sub(table.apply(sigma), scale(sigma, lambda));
  return head_norm(resid, sigma.order() / 2 + 1);
}

FixedPointResult schroeder_fixed_point(const SymbolSpec& s, int order) {
  const FixedPointResult fp = fixed_point(s, order);
  if (!fp.schroeder)
    throw domain_error("symbol has no Schroeder model: need 0 < |multiplier| < 1 "
                       "at the interior fixed point");
  return fp;
}

}  // namespace

KoenigsResult koenigs_iterate(const SymbolSpec& s, int order, double tol, int max_iter) {
  if (!(tol > 0.0)) throw usage_error("tolerance must be positive");
  if (max_iter < 2) throw usage_error("need at least two iterations");
  const FixedPointResult fp = schroeder_fixed_point(s, order);
  const Cx a = fp.location.value();
  const Cx lambda = fp.multiplier;
  const Cx inv_lambda = Cx(1.0, 0.0) / lambda;

  const TaylorSeries phi = symbol_series(s, order);
  const PowerTable table(phi);

  // Iterate sigma -> (sigma o phi)/lambda, which has the same limit as the
  // renormalized orbit (phi^{[n]} - a)/lambda^n but avoids forming lambda^n.
  // The constant term is re-pinned to sigma(a) = 0 every step: that mode of
  // the iteration map expands by 1/lambda, so rounding noise left in it
  // would grow until no tolerance could ever be met.
  auto pin_constant = [&](TaylorSeries f) {
    return sub(f, TaylorSeries::constant(evaluate(f, a), order));
  };

  TaylorSeries sigma =
      pin_constant(scale(sub(phi, TaylorSeries::constant(a, order)), inv_lambda));

  std::vector<double> deltas;
  for (int n = 2; n <= max_iter; ++n) {
    const TaylorSeries next = pin_constant(scale(table.apply(sigma), inv_lambda));
    const double delta = max_abs_coeff(sub(next, sigma));
    deltas.push_back(delta);
    sigma = next;
    if (delta < tol) {
      sigma = renormalize_at_fixed_point(std::move(sigma), a);
      return {sigma, fp.location, lambda, half_block_residual(sigma, table, lambda),
              n, std::move(deltas)};
    }
  }
  throw convergence_error("Koenigs orbit renormalization did not converge", deltas.back());
}

KoenigsResult koenigs_recurrence(const SymbolSpec& s, int order) {
  const FixedPointResult fp = schroeder_fixed_point(s, order);
  const Cx a = fp.location.value();

  const TaylorSeries phi = symbol_series(s, order);
  // Recentered symbol psi(w) = phi(w + a) - a; psi(0) = 0 holds by
  // construction, so the rounding-level constant term is pinned to zero
  // before the triangular solve below relies on it.
  TaylorSeries psi = sub(compose(phi, TaylorSeries::linear(a, Cx(1.0, 0.0), order)),
                         TaylorSeries::constant(a, order));
  {
    std::vector<Cx> c = psi.coeffs();
    c[0] = Cx(0.0, 0.0);
    psi = TaylorSeries(std::move(c));
  }
  const Cx lambda = psi.coeff(1);
  const PowerTable psi_powers(psi);

  std::vector<Cx> sig(order + 1, Cx(0.0, 0.0));
  sig[1] = Cx(1.0, 0.0);
  Cx lambda_pow = lambda;
  for (int k = 2; k <= order; ++k) {
    lambda_pow *= lambda;
    const Cx denom = lambda - lambda_pow;
    if (std::abs(denom) < 1e-13)
      throw ill_conditioned_error("multiplier resonance: lambda^k too close to lambda");
    Cx num(0.0, 0.0);
    for (int i = 1; i < k; ++i) num += sig[i] * psi_powers.power(i).coeff(k);
    sig[k] = num / denom;
  }

  // The tail of sig is relatively inaccurate once the true coefficients decay
  // below roundoff, but it still satisfies the recurrence to working
  // precision. Keep it: the compose-back below relies on cancellation between
  // binomially inflated terms, and that cancellation survives only when the
  // whole computed solution is fed through. (Zeroing "noise" coefficients
  // here demonstrably poisons the leading block.)
  const TaylorSeries recentred(std::move(sig));
  TaylorSeries sigma =
      compose(recentred, TaylorSeries::linear(-a, Cx(1.0, 0.0), order));
  sigma = renormalize_at_fixed_point(std::move(sigma), a);

  const PowerTable phi_powers(phi);
  return {sigma, fp.location, fp.multiplier,
          half_block_residual(sigma, phi_powers, fp.multiplier), 0, {}};
}

std::vector<TaylorSeries> koenigs_sequence(const TaylorSeries& sigma, int count) {
  if (count < 0) throw usage_error("negative sequence length");
  std::vector<TaylorSeries> out;
  out.reserve(count + 1);
  out.push_back(TaylorSeries::constant(Cx(1.0, 0.0), sigma.order()));
  for (int n = 1; n <= count; ++n) out.push_back(mul(out.back(), sigma));
  return out;
}

TaylorSeries renormalize_unit_norm(const TaylorSeries& sigma) {
  const double n = norm(sigma);
  if (!(n > 0.0)) throw usage_error("cannot normalize the zero series");
  return scale(sigma, Cx(1.0 / n, 0.0));
}

}  // namespace koenigslab
