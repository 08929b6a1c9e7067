#include <cmath>
#include <limits>

#include "doctest.h"
#include "koenigslab/series.hpp"
#include "test_util.hpp"

using namespace koenigslab;

TEST_SUITE("series") {

TEST_CASE("construction and factories") {
  const TaylorSeries z = TaylorSeries::monomial(1, 4);
  CHECK(z.order() == 4);
  CHECK(z.coeff(0) == Cx(0.0, 0.0));
  CHECK(z.coeff(1) == Cx(1.0, 0.0));
  CHECK(z.coeff(4) == Cx(0.0, 0.0));

  const TaylorSeries c = TaylorSeries::constant(Cx(2.0, -1.0), 3);
  CHECK(c.coeff(0) == Cx(2.0, -1.0));
  CHECK(c.coeff(3) == Cx(0.0, 0.0));

  const TaylorSeries l = TaylorSeries::linear(Cx(0.25, 0.0), Cx(0.5, 0.0), 2);
  CHECK(l.coeff(0) == Cx(0.25, 0.0));
  CHECK(l.coeff(1) == Cx(0.5, 0.0));

  CHECK(TaylorSeries::zero(0).order() == 0);
  CHECK_THROWS_AS(TaylorSeries::zero(-1), usage_error);
  CHECK_THROWS_AS(TaylorSeries::linear(Cx(0, 0), Cx(1, 0), 0), usage_error);
  CHECK_THROWS_AS(TaylorSeries::monomial(5, 4), usage_error);
  CHECK_THROWS_AS(TaylorSeries({}), usage_error);
  CHECK_THROWS_AS(z.coeff(5), usage_error);
  CHECK_THROWS_AS(z.coeff(-1), usage_error);

  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(TaylorSeries({Cx(inf, 0.0)}), usage_error);
  CHECK_THROWS_AS(TaylorSeries({Cx(0.0, nan)}), usage_error);
}

TEST_CASE("truncated cuts and pads") {
  const TaylorSeries f({Cx(1, 0), Cx(2, 0), Cx(3, 0)});
  const TaylorSeries cut = f.truncated(1);
  CHECK(cut.order() == 1);
  CHECK(cut.coeff(1) == Cx(2, 0));
  const TaylorSeries pad = f.truncated(4);
  CHECK(pad.order() == 4);
  CHECK(pad.coeff(2) == Cx(3, 0));
  CHECK(pad.coeff(4) == Cx(0, 0));
  CHECK_THROWS_AS(f.truncated(-1), usage_error);
}

TEST_CASE("linear arithmetic is exact") {
  const TaylorSeries f({Cx(1, 1), Cx(2, 0), Cx(0, -3)});
  const TaylorSeries g({Cx(0.5, 0), Cx(-2, 0), Cx(1, 1)});
  const TaylorSeries s = add(f, g);
  CHECK(s.coeff(0) == Cx(1.5, 1));
  CHECK(s.coeff(1) == Cx(0, 0));
  CHECK(s.coeff(2) == Cx(1, -2));
  const TaylorSeries d = sub(s, g);
  for (int k = 0; k <= 2; ++k) CHECK(d.coeff(k) == f.coeff(k));
  const TaylorSeries t = scale(f, Cx(0, 2));
  CHECK(t.coeff(0) == Cx(-2, 2));

  CHECK_THROWS_AS(add(f, TaylorSeries::zero(5)), usage_error);
  CHECK_THROWS_AS(sub(f, TaylorSeries::zero(1)), usage_error);
}

TEST_CASE("mul is the truncated Cauchy product") {
  const TaylorSeries one_plus_z = TaylorSeries::linear(Cx(1, 0), Cx(1, 0), 4);
  const TaylorSeries one_minus_z = TaylorSeries::linear(Cx(1, 0), Cx(-1, 0), 4);
  const TaylorSeries p = mul(one_plus_z, one_minus_z);
  CHECK(p.coeff(0) == Cx(1, 0));
  CHECK(p.coeff(1) == Cx(0, 0));
  CHECK(p.coeff(2) == Cx(-1, 0));
  CHECK(p.coeff(3) == Cx(0, 0));

  // Tail terms above the order are dropped, never folded back.
  const TaylorSeries zn = TaylorSeries::monomial(4, 4);
  const TaylorSeries gone = mul(zn, TaylorSeries::monomial(1, 4));
  CHECK(max_abs_coeff(gone) == 0.0);
}

TEST_CASE("differentiate shifts and scales") {
  const TaylorSeries f = TaylorSeries::monomial(5, 6);
  const TaylorSeries df = differentiate(f);
  CHECK(df.order() == 6);
  CHECK(df.coeff(4) == Cx(5, 0));
  CHECK(df.coeff(5) == Cx(0, 0));
  CHECK(df.coeff(6) == Cx(0, 0));
}

TEST_CASE("evaluate sums the geometric tail") {
  std::vector<Cx> c(65, Cx(1.0, 0.0));
  const TaylorSeries geo{std::move(c)};
  const Cx v = evaluate(geo, Cx(0.3, 0.0));
  CHECK(std::abs(v - Cx(1.0 / 0.7, 0.0)) < 1e-14);
  CHECK_THROWS_AS(evaluate(geo, Cx(1.0, 0.0)), domain_error);
  CHECK_THROWS_AS(evaluate(geo, Cx(0.8, 0.8)), domain_error);
}

TEST_CASE("compose oracle and margin") {
  const TaylorSeries zsq = TaylorSeries::monomial(2, 8);
  const TaylorSeries inner = TaylorSeries::linear(Cx(0.5, 0), Cx(0.5, 0), 8);
  const TaylorSeries c = compose(zsq, inner);
  CHECK(c.coeff(0) == Cx(0.25, 0));
  CHECK(c.coeff(1) == Cx(0.5, 0));
  CHECK(c.coeff(2) == Cx(0.25, 0));
  CHECK(c.coeff(3) == Cx(0, 0));

  const TaylorSeries hot = TaylorSeries::constant(Cx(1.0 - 1e-12, 0), 8);
  CHECK_THROWS_AS(compose(zsq, hot), domain_error);
  CHECK_THROWS_AS(compose(zsq, TaylorSeries::zero(4)), usage_error);
}

TEST_CASE("compose is associative on the leading half") {
  testutil::Rng rng{41};
  const int n = 64;
  for (int trial = 0; trial < 6; ++trial) {
    const TaylorSeries f = testutil::random_series(rng, n, 1.0, 0.8, false);
    const TaylorSeries phi = testutil::random_series(rng, n, 0.4, 0.6, true);
    const TaylorSeries psi = testutil::random_series(rng, n, 0.4, 0.6, true);
    const TaylorSeries left = compose(compose(f, phi), psi);
    const TaylorSeries right = compose(f, compose(phi, psi));
    const double gap =
        max_abs_coeff(sub(left.truncated(n / 2), right.truncated(n / 2)));
    CHECK(gap < 1e-10);
  }
}

TEST_CASE("inner product and norms") {
  const TaylorSeries f({Cx(1, 0), Cx(2, 0)});
  const TaylorSeries g({Cx(3, 0), Cx(4, 0)});
  CHECK(inner_product(f, g) == Cx(11, 0));
  // Conjugation sits on the second slot.
  const TaylorSeries h({Cx(0, 1), Cx(0, 0)});
  CHECK(inner_product(f, h) == Cx(0, -1));
  CHECK(norm(f) == std::sqrt(5.0));
  CHECK(max_abs_coeff(g) == 4.0);

  const TaylorSeries q({Cx(1, 0), Cx(1, 0), Cx(7, 0)});
  CHECK(head_norm(q, 2) == std::sqrt(2.0));
  CHECK(head_norm(q, 0) == 0.0);
  CHECK_THROWS_AS(head_norm(q, 4), usage_error);
  CHECK_THROWS_AS(inner_product(f, q), usage_error);
}

TEST_CASE("power table matches compose") {
  testutil::Rng rng{99};
  const int n = 48;
  const TaylorSeries base = testutil::random_series(rng, n, 0.3, 0.7, false);
  const PowerTable table(base);
  CHECK(table.order() == n);
  // Powers are literal repeated products.
  CHECK(max_abs_coeff(sub(table.power(0), TaylorSeries::constant(Cx(1, 0), n))) == 0.0);
  CHECK(max_abs_coeff(sub(table.power(1), base)) == 0.0);
  CHECK(max_abs_coeff(sub(table.power(3), mul(mul(base, base), base))) == 0.0);
  CHECK_THROWS_AS(table.power(n + 1), usage_error);

  for (int trial = 0; trial < 4; ++trial) {
    const TaylorSeries f = testutil::random_series(rng, n, 1.0, 0.9, false);
    const double gap = max_abs_coeff(sub(table.apply(f), compose(f, base)));
    CHECK(gap < 1e-13);
  }
  CHECK_THROWS_AS(table.apply(TaylorSeries::zero(n - 1)), usage_error);

  const PowerTable hot(TaylorSeries::constant(Cx(0.9999999999, 0), 4));
  CHECK_THROWS_AS(hot.apply(TaylorSeries::monomial(1, 4)), domain_error);
}

}  // TEST_SUITE
