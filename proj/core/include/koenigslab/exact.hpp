#ifndef KOENIGSLAB_EXACT_HPP
#define KOENIGSLAB_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "koenigslab/errors.hpp"

namespace koenigslab::exact {

using Rational = boost::multiprecision::cpp_rational;

/// Rationals print "p/q" with q > 0, including "n/1" for integers, so that
/// certificate lines parse uniformly.
std::string format_rational(const Rational& r);

/// Accepts "p" or "p/q" with optional leading '-'. Decimal points are
/// rejected deliberately: the exact path never sees floating input.
Rational parse_rational(const std::string& text);

/// Generalized binomial coefficient r(r-1)...(r-j+1)/j! for integer r of
/// either sign, j >= 0.
Rational binomial_general(long long r, int j);

/// sum_{j=0}^{k} (-1)^j C(k, j); zero for every k >= 1.
Rational alternating_sum(int k);

/// Hardy pairing <z^n K_a^{n+1}, (z-a)^m> evaluated as a finite rational
/// sum; equals 1 when n = m and 0 otherwise. a must lie in (-1, 1).
Rational biorthogonality_pairing(const Rational& a, int n, int m);

/// Exact coefficients of a polynomial; trailing zero coefficients trimmed
/// (the zero polynomial keeps a single zero entry).
struct ExactPolynomial {
  std::vector<Rational> coeffs;
  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

ExactPolynomial trim(std::vector<Rational> coeffs);

/// Image of (z-a)^n under the kernel conjugation at rational a, split into
/// an exact polynomial part (the truncation of z^n K_a^{n+1} to the given
/// degree), the squared scalar (1-a^2)^{2n+1}, and a sign (-1)^n:
///   image = sign * sqrt(squared_scale) * poly.
/// The square root is irrational in general, which is why the scalar is
/// reported squared. degree >= n required.
struct KernelImageExact {
  ExactPolynomial poly;
  Rational squared_scale;
  int sign;
};

KernelImageExact kernel_conjugation_image(const Rational& a, int n, int degree);

/// Both sides of the necessary condition, squared, as exact rationals:
/// lhs_sq = a^2 (the symbol family fixing a with the automorphism as
/// eigenfunction), rhs_sq = a^2/(1+a^2). Distinct for every a in (0,1),
/// which is the exact counterexample the floating test approximates.
struct NecessaryGapExact {
  Rational lhs_sq;
  Rational rhs_sq;
  bool distinct;
};

NecessaryGapExact necessary_condition_gap(const Rational& a);

/// One line per pair (n, m), 0 <= n, m <= max_index:
///   "BIORTH a=p/q n=N m=M value=r/s PASS"
/// PASS iff the pairing equals the Kronecker delta.
struct BiorthCertificate {
  std::vector<std::string> lines;
  bool all_pass;
};

BiorthCertificate biorth_certificate(const Rational& a, int max_index);

}  // namespace koenigslab::exact

#endif  // KOENIGSLAB_EXACT_HPP
