#include "koenigslab/exact.hpp"

#include <cctype>

namespace koenigslab::exact {

using boost::multiprecision::cpp_int;

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

cpp_int parse_integer(const std::string& text) {
  if (text.empty()) throw usage_error("empty integer in rational");
  size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size()) throw usage_error("bare sign is not an integer");
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw usage_error("rational must be 'p' or 'p/q' in integers, got '" + text + "'");
  return cpp_int(text);
}

Rational pow_rational(const Rational& base, int e) {
  Rational acc(1);
  for (int k = 0; k < e; ++k) acc *= base;
  return acc;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const cpp_int num = parse_integer(text.substr(0, slash));
  const cpp_int den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw usage_error("zero denominator");
  return Rational(num, den);
}

Rational binomial_general(long long r, int j) {
  if (j < 0) throw usage_error("binomial lower index must be non-negative");
  cpp_int num(1), den(1);
  for (int t = 0; t < j; ++t) {
    num *= cpp_int(r - t);
    den *= cpp_int(t + 1);
  }
  return Rational(num, den);
}

Rational alternating_sum(int k) {
  if (k < 0) throw usage_error("negative upper index");
  Rational acc(0);
  for (int j = 0; j <= k; ++j) {
    const Rational term = binomial_general(k, j);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

namespace {

void check_interior(const Rational& a) {
  if (abs(numerator(a)) >= denominator(a))
    throw domain_error("rational parameter must lie strictly inside (-1, 1)");
}

}  // namespace

Rational biorthogonality_pairing(const Rational& a, int n, int m) {
  if (n < 0 || m < 0) throw usage_error("negative index in pairing");
  check_interior(a);
  if (m < n) return Rational(0);
  // [z^{n+j}] z^n K_a^{n+1} = C(n+j, j) a^j;  [z^{n+j}] (z-a)^m = C(m, n+j) (-a)^{m-n-j}
  Rational acc(0);
  for (int j = 0; j <= m - n; ++j) {
    const Rational term = binomial_general(n + j, j) * pow_rational(a, j) *
                          binomial_general(m, n + j) * pow_rational(-a, m - n - j);
    acc += term;
  }
  return acc;
}

ExactPolynomial trim(std::vector<Rational> coeffs) {
  if (coeffs.empty()) coeffs.push_back(Rational(0));
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return ExactPolynomial{std::move(coeffs)};
}

KernelImageExact kernel_conjugation_image(const Rational& a, int n, int degree) {
  if (n < 0) throw usage_error("negative power");
  if (degree < n) throw usage_error("degree must be at least the power");
  check_interior(a);
  std::vector<Rational> c(degree + 1, Rational(0));
  for (int j = 0; j + n <= degree; ++j)
    c[n + j] = binomial_general(n + j, j) * pow_rational(a, j);
  KernelImageExact out;
  out.poly = trim(std::move(c));
  out.squared_scale = pow_rational(Rational(1) - a * a, 2 * n + 1);
  out.sign = (n % 2 == 0) ? 1 : -1;
  return out;
}

NecessaryGapExact necessary_condition_gap(const Rational& a) {
  if (!(a > 0)) throw domain_error("gap statement needs a in (0,1)");
  check_interior(a);
  NecessaryGapExact out;
  out.lhs_sq = a * a;
  out.rhs_sq = (a * a) / (Rational(1) + a * a);
  out.distinct = out.lhs_sq != out.rhs_sq;
  return out;
}

BiorthCertificate biorth_certificate(const Rational& a, int max_index) {
  if (max_index < 0) throw usage_error("negative certificate range");
  check_interior(a);
  BiorthCertificate out;
  out.all_pass = true;
  const std::string a_text = format_rational(a);
  for (int n = 0; n <= max_index; ++n) {
    for (int m = 0; m <= max_index; ++m) {
      const Rational value = biorthogonality_pairing(a, n, m);
      const bool ok = value == Rational(n == m ? 1 : 0);
      out.all_pass = out.all_pass && ok;
      out.lines.push_back("BIORTH a=" + a_text + " n=" + std::to_string(n) +
                          " m=" + std::to_string(m) +
                          " value=" + format_rational(value) +
                          (ok ? " PASS" : " FAIL"));
    }
  }
  return out;
}

}  // namespace koenigslab::exact
