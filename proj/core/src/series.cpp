#include "koenigslab/series.hpp"

#include <cmath>
#include <string>

namespace koenigslab {

namespace {

void check_finite(const std::vector<Cx>& c) {
  for (const Cx& v : c) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw usage_error("series coefficient is not finite");
  }
}

void check_same_order(const TaylorSeries& f, const TaylorSeries& g) {
  if (f.order() != g.order())
    throw usage_error("truncation order mismatch: " +
                      std::to_string(f.order()) + " vs " +
                      std::to_string(g.order()));
}

}  // namespace

TaylorSeries::TaylorSeries(std::vector<Cx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw usage_error("series needs at least the constant term");
  check_finite(coeffs_);
}

TaylorSeries TaylorSeries::zero(int order) {
  if (order < 0) throw usage_error("negative truncation order");
  return TaylorSeries(std::vector<Cx>(order + 1, Cx(0.0, 0.0)));
}

TaylorSeries TaylorSeries::constant(Cx value, int order) {
  auto s = zero(order);
  s.coeffs_[0] = value;
  check_finite(s.coeffs_);
  return s;
}

TaylorSeries TaylorSeries::linear(Cx c0, Cx c1, int order) {
  if (order < 1) throw usage_error("linear series needs order >= 1");
  auto s = zero(order);
  s.coeffs_[0] = c0;
  s.coeffs_[1] = c1;
  check_finite(s.coeffs_);
  return s;
}

TaylorSeries TaylorSeries::monomial(int k, int order) {
  if (k < 0 || k > order) throw usage_error("monomial degree outside truncation order");
  auto s = zero(order);
  s.coeffs_[k] = Cx(1.0, 0.0);
  return s;
}

Cx TaylorSeries::coeff(int k) const {
  if (k < 0 || k >= size()) throw usage_error("coefficient index out of range");
  return coeffs_[k];
}

TaylorSeries TaylorSeries::truncated(int new_order) const {
  if (new_order < 0) throw usage_error("negative truncation order");
  std::vector<Cx> c(new_order + 1, Cx(0.0, 0.0));
  const int keep = std::min(new_order, order());
  for (int k = 0; k <= keep; ++k) c[k] = coeffs_[k];
  return TaylorSeries(std::move(c));
}

TaylorSeries add(const TaylorSeries& f, const TaylorSeries& g) {
  check_same_order(f, g);
  std::vector<Cx> c(f.size());
  for (int k = 0; k < f.size(); ++k) c[k] = f.coeffs()[k] + g.coeffs()[k];
  return TaylorSeries(std::move(c));
}

TaylorSeries sub(const TaylorSeries& f, const TaylorSeries& g) {
  check_same_order(f, g);
  std::vector<Cx> c(f.size());
  for (int k = 0; k < f.size(); ++k) c[k] = f.coeffs()[k] - g.coeffs()[k];
  return TaylorSeries(std::move(c));
}

TaylorSeries scale(const TaylorSeries& f, Cx c) {
  std::vector<Cx> out(f.size());
  for (int k = 0; k < f.size(); ++k) out[k] = c * f.coeffs()[k];
  return TaylorSeries(std::move(out));
}

TaylorSeries mul(const TaylorSeries& f, const TaylorSeries& g) {
  check_same_order(f, g);
  const int n = f.order();
  std::vector<Cx> c(n + 1, Cx(0.0, 0.0));
  for (int i = 0; i <= n; ++i) {
    const Cx fi = f.coeffs()[i];
    if (fi == Cx(0.0, 0.0)) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += fi * g.coeffs()[j];
  }
  return TaylorSeries(std::move(c));
}

TaylorSeries differentiate(const TaylorSeries& f) {
  std::vector<Cx> c(f.size(), Cx(0.0, 0.0));
  for (int k = 1; k < f.size(); ++k) c[k - 1] = static_cast<double>(k) * f.coeffs()[k];
  return TaylorSeries(std::move(c));
}

Cx evaluate(const TaylorSeries& f, Cx z) {
  if (std::abs(z) >= 1.0) throw domain_error("evaluation point outside the open unit disk");
  Cx acc(0.0, 0.0);
  for (int k = f.order(); k >= 0; --k) acc = acc * z + f.coeffs()[k];
  return acc;
}

TaylorSeries compose(const TaylorSeries& f, const TaylorSeries& phi) {
  check_same_order(f, phi);
  if (std::abs(phi.coeffs()[0]) >= 1.0 - kComposeMargin)
    throw domain_error("inner series sends 0 too close to the unit circle");
  // Horner on series: acc -> acc*phi + f_k, from the top coefficient down.
  TaylorSeries acc = TaylorSeries::constant(f.coeffs()[f.order()], f.order());
  for (int k = f.order() - 1; k >= 0; --k) {
    acc = mul(acc, phi);
    std::vector<Cx> c = acc.coeffs();
    c[0] += f.coeffs()[k];
    acc = TaylorSeries(std::move(c));
  }
  return acc;
}

Cx inner_product(const TaylorSeries& f, const TaylorSeries& g) {
  check_same_order(f, g);
  Cx acc(0.0, 0.0);
  for (int k = 0; k < f.size(); ++k) acc += f.coeffs()[k] * std::conj(g.coeffs()[k]);
  return acc;
}

double norm(const TaylorSeries& f) {
  double acc = 0.0;
  for (const Cx& v : f.coeffs()) acc += std::norm(v);
  return std::sqrt(acc);
}

double max_abs_coeff(const TaylorSeries& f) {
  double m = 0.0;
  for (const Cx& v : f.coeffs()) m = std::max(m, std::abs(v));
  return m;
}

double head_norm(const TaylorSeries& f, int count) {
  if (count < 0 || count > f.size()) throw usage_error("head_norm count out of range");
  double acc = 0.0;
  for (int k = 0; k < count; ++k) acc += std::norm(f.coeffs()[k]);
  return std::sqrt(acc);
}

PowerTable::PowerTable(const TaylorSeries& base)
    : order_(base.order()), base0_(base.coeffs()[0]) {
  powers_.reserve(order_ + 1);
  powers_.push_back(TaylorSeries::constant(Cx(1.0, 0.0), order_));
  if (order_ >= 1) powers_.push_back(base);
  for (int j = 2; j <= order_; ++j) powers_.push_back(mul(powers_.back(), base));
}

const TaylorSeries& PowerTable::power(int j) const {
  if (j < 0 || j >= static_cast<int>(powers_.size()))
    throw usage_error("power index out of range");
  return powers_[j];
}

TaylorSeries PowerTable::apply(const TaylorSeries& f) const {
  if (f.order() != order_) throw usage_error("truncation order mismatch in PowerTable::apply");
  if (std::abs(base0_) >= 1.0 - kComposeMargin)
    throw domain_error("inner series sends 0 too close to the unit circle");
  std::vector<Cx> c(order_ + 1, Cx(0.0, 0.0));
  for (int j = 0; j <= order_; ++j) {
    const Cx fj = f.coeffs()[j];
    if (fj == Cx(0.0, 0.0)) continue;
    const std::vector<Cx>& p = powers_[j].coeffs();
    for (int k = 0; k <= order_; ++k) c[k] += fj * p[k];
  }
  return TaylorSeries(std::move(c));
}

}  // namespace koenigslab
