#include <string>

#include "doctest.h"
#include "koenigslab/exact.hpp"

using namespace koenigslab;
using exact::Rational;

TEST_SUITE("exact") {

TEST_CASE("rational formatting and parsing") {
  CHECK(exact::format_rational(Rational(3, 5)) == "3/5");
  CHECK(exact::format_rational(Rational(-7, 2)) == "-7/2");
  CHECK(exact::format_rational(Rational(4)) == "4/1");
  CHECK(exact::format_rational(Rational(0)) == "0/1");

  CHECK(exact::parse_rational("3/5") == Rational(3, 5));
  CHECK(exact::parse_rational("-7/2") == Rational(-7, 2));
  CHECK(exact::parse_rational("5") == Rational(5));
  CHECK(exact::parse_rational("6/4") == Rational(3, 2));

  CHECK_THROWS_AS(exact::parse_rational("0.5"), usage_error);
  CHECK_THROWS_AS(exact::parse_rational(""), usage_error);
  CHECK_THROWS_AS(exact::parse_rational("x/y"), usage_error);
  CHECK_THROWS_AS(exact::parse_rational("1/0"), usage_error);

  // format -> parse is the identity on arbitrary rationals.
  const Rational r(-123456789, 987654);
  CHECK(exact::parse_rational(exact::format_rational(r)) == r);
}

TEST_CASE("generalized binomial coefficients") {
  CHECK(exact::binomial_general(5, 2) == Rational(10));
  CHECK(exact::binomial_general(0, 0) == Rational(1));
  CHECK(exact::binomial_general(7, 0) == Rational(1));
  CHECK(exact::binomial_general(3, 5) == Rational(0));
  // Negative upper index: C(-1, j) = (-1)^j, C(-2, 3) = -4.
  CHECK(exact::binomial_general(-1, 2) == Rational(1));
  CHECK(exact::binomial_general(-1, 3) == Rational(-1));
  CHECK(exact::binomial_general(-2, 3) == Rational(-4));
  CHECK_THROWS_AS(exact::binomial_general(3, -1), usage_error);
}

TEST_CASE("alternating binomial sums telescope to zero") {
  CHECK(exact::alternating_sum(0) == Rational(1));
  for (int k = 1; k <= 64; ++k) CHECK(exact::alternating_sum(k) == Rational(0));
  CHECK_THROWS_AS(exact::alternating_sum(-1), usage_error);
}

TEST_CASE("biorthogonality pairing is the kronecker delta") {
  for (const Rational& a : {Rational(1, 2), Rational(3, 5)})
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= 6; ++m)
        CHECK(exact::biorthogonality_pairing(a, n, m) ==
              (n == m ? Rational(1) : Rational(0)));

  // Degenerate center: the pairing is the plain monomial pairing.
  CHECK(exact::biorthogonality_pairing(Rational(0), 3, 3) == Rational(1));
  CHECK(exact::biorthogonality_pairing(Rational(0), 3, 5) == Rational(0));

  CHECK_THROWS_AS(exact::biorthogonality_pairing(Rational(1), 0, 0), domain_error);
  CHECK_THROWS_AS(exact::biorthogonality_pairing(Rational(-5, 4), 0, 0),
                  domain_error);
  CHECK_THROWS_AS(exact::biorthogonality_pairing(Rational(1, 2), -1, 0),
                  usage_error);
}

TEST_CASE("kernel conjugation image in closed form") {
  // n = 0 at a = 1/2: image of 1 is sqrt(3/4) * K_{1/2}, whose truncated
  // coefficients are (1/2)^k.
  const exact::KernelImageExact im0 =
      exact::kernel_conjugation_image(Rational(1, 2), 0, 6);
  CHECK(im0.sign == 1);
  CHECK(im0.squared_scale == Rational(3, 4));
  REQUIRE(im0.poly.degree() == 6);
  for (int k = 0; k <= 6; ++k) {
    Rational want(1);
    for (int i = 0; i < k; ++i) want /= 2;
    CHECK(im0.poly.coeffs[k] == want);
  }

  // n = 1: sign flips, scale cubes, polynomial starts at z with the
  // falling-factorial weights k (1/2)^(k-1).
  const exact::KernelImageExact im1 =
      exact::kernel_conjugation_image(Rational(1, 2), 1, 6);
  CHECK(im1.sign == -1);
  CHECK(im1.squared_scale == Rational(27, 64));  // (3/4)^3
  CHECK(im1.poly.coeffs[0] == Rational(0));
  CHECK(im1.poly.coeffs[1] == Rational(1));
  CHECK(im1.poly.coeffs[2] == Rational(1));       // 2 * (1/2)
  CHECK(im1.poly.coeffs[3] == Rational(3, 4));    // 3 * (1/4)

  // The scale follows (1 - a^2)^(2n+1) and the sign (-1)^n.
  for (int n = 0; n <= 5; ++n) {
    const exact::KernelImageExact im =
        exact::kernel_conjugation_image(Rational(1, 2), n, 8);
    Rational scale(1);
    for (int i = 0; i < 2 * n + 1; ++i) scale *= Rational(3, 4);
    CHECK(im.squared_scale == scale);
    CHECK(im.sign == (n % 2 == 0 ? 1 : -1));
  }

  CHECK_THROWS_AS(exact::kernel_conjugation_image(Rational(1, 2), 4, 3),
                  usage_error);
  CHECK_THROWS_AS(exact::kernel_conjugation_image(Rational(2), 0, 4), domain_error);
}

TEST_CASE("polynomial trimming") {
  const exact::ExactPolynomial p =
      exact::trim({Rational(1), Rational(2), Rational(0), Rational(0)});
  CHECK(p.degree() == 1);
  const exact::ExactPolynomial z = exact::trim({Rational(0), Rational(0)});
  CHECK(z.degree() == 0);
  CHECK(z.coeffs[0] == Rational(0));
}

TEST_CASE("necessary condition gap is exactly positive") {
  const exact::NecessaryGapExact g = exact::necessary_condition_gap(Rational(1, 2));
  CHECK(g.lhs_sq == Rational(1, 4));
  CHECK(g.rhs_sq == Rational(1, 5));
  CHECK(g.distinct);
  CHECK(g.lhs_sq - g.rhs_sq == Rational(1, 20));

  // Distinct for every center the statement admits; the degenerate origin
  // and the boundary are refused.
  CHECK(exact::necessary_condition_gap(Rational(3, 5)).distinct);
  CHECK_THROWS_AS(exact::necessary_condition_gap(Rational(0)), domain_error);
  CHECK_THROWS_AS(exact::necessary_condition_gap(Rational(1)), domain_error);
}

TEST_CASE("biorthogonality certificate") {
  const exact::BiorthCertificate cert =
      exact::biorth_certificate(Rational(1, 2), 12);
  CHECK(cert.all_pass);
  REQUIRE(cert.lines.size() == 169);
  CHECK(cert.lines.front() == "BIORTH a=1/2 n=0 m=0 value=1/1 PASS");
  // Every line carries the verdict token.
  for (const std::string& line : cert.lines)
    CHECK(line.find(" PASS") != std::string::npos);

  CHECK_THROWS_AS(exact::biorth_certificate(Rational(1, 2), -1), usage_error);
}

}  // TEST_SUITE
