#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "koenigslab/koenigs.hpp"
#include "koenigslab/symbols.hpp"
#include "test_util.hpp"

using namespace koenigslab;

namespace {
double series_gap(const TaylorSeries& f, const TaylorSeries& g) {
  return max_abs_coeff(sub(f, g));
}

// Pushes sigma through the functional equation once and reports the worst
// coefficient of C_phi sigma^n - lambda^n sigma^n over the leading half.
double eigen_relation_gap(const TaylorSeries& phi, const TaylorSeries& sigma,
                          Cx lambda, int n) {
  TaylorSeries pow = TaylorSeries::constant(Cx(1.0, 0.0), sigma.order());
  for (int i = 0; i < n; ++i) pow = mul(pow, sigma);
  const TaylorSeries lhs = compose(pow, phi);
  const TaylorSeries rhs = scale(pow, std::pow(lambda, n));
  const int head = sigma.order() / 2;
  return series_gap(lhs.truncated(head), rhs.truncated(head));
}
}  // namespace

TEST_SUITE("koenigs") {

TEST_CASE("affine symbol solves exactly on both routes") {
  const SymbolSpec phi = AffineSymbol{Cx(0.5, 0.0), Cx(0.25, 0.0)};
  const KoenigsResult it = koenigs_iterate(phi, 64, 1e-13, 200);
  const KoenigsResult rec = koenigs_recurrence(phi, 64);

  // sigma = z - 1/2 is the exact eigenfunction for z/2 + 1/4.
  TaylorSeries expect = TaylorSeries::monomial(1, 64);
  expect = add(expect, TaylorSeries::constant(Cx(-0.5, 0.0), 64));

  CHECK(series_gap(it.sigma, expect) < 1e-12);
  CHECK(series_gap(rec.sigma, expect) < 1e-12);
  CHECK(std::abs(it.multiplier - Cx(0.5, 0.0)) < 1e-14);
  CHECK(std::abs(rec.multiplier - Cx(0.5, 0.0)) < 1e-14);
  CHECK(it.residual < 1e-13);
  CHECK(rec.residual < 1e-13);
  // The iterate starts at the exact answer, so it converges immediately.
  CHECK(it.iterations_used <= 2);
}

TEST_CASE("blaschke pair matches the closed-form eigenfunction") {
  const SymbolSpec phi = BlaschkePairSymbol{DiskPoint{Cx(0.5, 0.0)}, Cx(0.3, 0.0)};
  const int n = 256;
  const KoenigsResult it = koenigs_iterate(phi, n, 1e-11, 400);
  const KoenigsResult rec = koenigs_recurrence(phi, n);

  // sigma = -(1-|a|^2) phi_a for the sandwich construction.
  const TaylorSeries closed = scale(
      symbol_series(AutomorphismSymbol{DiskPoint{Cx(0.5, 0.0)}}, n), Cx(-0.75, 0.0));

  const int head = n / 2;
  CHECK(series_gap(it.sigma.truncated(head), closed.truncated(head)) < 1e-8);
  CHECK(series_gap(rec.sigma.truncated(head), closed.truncated(head)) < 1e-8);
  CHECK(series_gap(it.sigma.truncated(head), rec.sigma.truncated(head)) < 1e-8);
  CHECK(std::abs(it.multiplier - Cx(0.3, 0.0)) < 1e-12);
  CHECK(std::abs(rec.multiplier - Cx(0.3, 0.0)) < 1e-12);
  CHECK(it.residual < 1e-8);
  CHECK(rec.residual < 1e-8);
}

TEST_CASE("normalization is pinned at the fixed point") {
  const SymbolSpec phi = BlaschkePairSymbol{DiskPoint{Cx(0.3, -0.2)}, Cx(0.1, 0.35)};
  const KoenigsResult rec = koenigs_recurrence(phi, 128);
  // sigma(a) = 0 and sigma'(a) = 1 by construction.
  CHECK(std::abs(evaluate(rec.sigma, Cx(0.3, -0.2))) < 1e-9);
  CHECK(std::abs(evaluate(differentiate(rec.sigma), Cx(0.3, -0.2)) - Cx(1.0, 0.0)) <
        1e-8);
}

TEST_CASE("rotations have no schroeder model") {
  CHECK_THROWS_AS(koenigs_iterate(RotationSymbol{1.0}, 64, 1e-10, 100), domain_error);
  CHECK_THROWS_AS(koenigs_recurrence(RotationSymbol{1.0}, 64), domain_error);
  // Same for the elliptic automorphism: interior fixed point, |multiplier|=1.
  CHECK_THROWS_AS(koenigs_recurrence(AutomorphismSymbol{DiskPoint{Cx(0.5, 0.0)}}, 64),
                  domain_error);
}

TEST_CASE("iterate reports non-convergence with its last residual") {
  const SymbolSpec phi = BlaschkePairSymbol{DiskPoint{Cx(0.5, 0.0)}, Cx(0.3, 0.0)};
  try {
    koenigs_iterate(phi, 128, 1e-13, 2);
    CHECK(false);
  } catch (const convergence_error& e) {
    CHECK(e.last_residual() > 0.0);
  }
  CHECK_THROWS_AS(koenigs_iterate(phi, 128, 1e-10, 1), usage_error);
  CHECK_THROWS_AS(koenigs_iterate(phi, 128, 0.0, 100), usage_error);
  CHECK_THROWS_AS(koenigs_iterate(phi, 128, -1.0, 100), usage_error);
}

TEST_CASE("step deltas settle monotonically") {
  const SymbolSpec phi = BlaschkePairSymbol{DiskPoint{Cx(0.5, 0.0)}, Cx(0.3, 0.0)};
  const KoenigsResult it = koenigs_iterate(phi, 128, 1e-11, 400);
  REQUIRE(it.step_deltas.size() >= 6);
  for (std::size_t i = 6; i < it.step_deltas.size(); ++i)
    CHECK(it.step_deltas[i] <= it.step_deltas[i - 1] * (1.0 + 1e-12));
}

TEST_CASE("eigenfunction powers form a sequence") {
  const SymbolSpec phi = AffineSymbol{Cx(0.5, 0.0), Cx(0.25, 0.0)};
  const KoenigsResult rec = koenigs_recurrence(phi, 64);

  const std::vector<TaylorSeries> seq0 = koenigs_sequence(rec.sigma, 0);
  REQUIRE(seq0.size() == 1);
  CHECK(series_gap(seq0[0], TaylorSeries::constant(Cx(1.0, 0.0), 64)) == 0.0);

  const std::vector<TaylorSeries> seq = koenigs_sequence(rec.sigma, 2);
  REQUIRE(seq.size() == 3);
  CHECK(series_gap(seq[1], rec.sigma) == 0.0);
  // (z - 1/2)^2 = z^2 - z + 1/4.
  TaylorSeries sq = TaylorSeries::monomial(2, 64);
  sq = add(sq, scale(TaylorSeries::monomial(1, 64), Cx(-1.0, 0.0)));
  sq = add(sq, TaylorSeries::constant(Cx(0.25, 0.0), 64));
  CHECK(series_gap(seq[2], sq) < 1e-14);

  CHECK_THROWS_AS(koenigs_sequence(rec.sigma, -1), usage_error);
}

TEST_CASE("powers satisfy the eigen relation") {
  const SymbolSpec aff = AffineSymbol{Cx(0.5, 0.0), Cx(0.25, 0.0)};
  const SymbolSpec pair = BlaschkePairSymbol{DiskPoint{Cx(0.5, 0.0)}, Cx(0.3, 0.0)};
  for (const SymbolSpec* s : {&aff, &pair}) {
    const int n = 256;
    const KoenigsResult rec = koenigs_recurrence(*s, n);
    const TaylorSeries phi = symbol_series(*s, n);
    // The head of the recurrence eigenfunction is accurate to roughly the
    // input precision (~1e-9 for the pair symbol), and taking the k-th
    // power compounds that, so the budget sits well above the ~2.5e-9
    // observed at k = 10.
    for (int k = 1; k <= 10; ++k)
      CHECK(eigen_relation_gap(phi, rec.sigma, rec.multiplier, k) < 1e-7);
  }
}

TEST_CASE("unit renormalization") {
  // Use the orbit route here: its coefficient tail decays cleanly, so the
  // normalization is not polluted by the roundoff tail the recurrence
  // route carries beyond order/2.
  const SymbolSpec phi = BlaschkePairSymbol{DiskPoint{Cx(0.5, 0.0)}, Cx(0.3, 0.0)};
  const KoenigsResult it = koenigs_iterate(phi, 256);
  const TaylorSeries unit = renormalize_unit_norm(it.sigma);
  CHECK(std::abs(std::sqrt(inner_product(unit, unit).real()) - 1.0) < 1e-12);
  // Idempotent: renormalizing a unit vector is the identity.
  CHECK(series_gap(renormalize_unit_norm(unit), unit) < 1e-15);
  // And the unit vector is proportional to the involution itself.
  const TaylorSeries invol =
      symbol_series(AutomorphismSymbol{DiskPoint{Cx(0.5, 0.0)}}, 256);
  const double plus = series_gap(unit, invol);
  const double minus = series_gap(unit, scale(invol, Cx(-1.0, 0.0)));
  CHECK(std::min(plus, minus) < 1e-8);

  CHECK_THROWS_AS(renormalize_unit_norm(TaylorSeries::constant(Cx(0.0, 0.0), 8)),
                  usage_error);
}

}  // TEST_SUITE
