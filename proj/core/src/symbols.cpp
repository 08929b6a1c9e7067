#include "koenigslab/symbols.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "koenigslab/io.hpp"

namespace koenigslab {

namespace {

constexpr double kSelfMapSlack = 1e-12;
constexpr int kBoundaryGrid = 1024;
constexpr double kNewtonTol = 1e-14;
constexpr int kNewtonMaxSteps = 100;

// Horner without the interior-point guard: Newton iterates may brush the
// circle before the scheme is declared divergent.
Cx eval_unchecked(const TaylorSeries& f, Cx z) {
  Cx acc(0.0, 0.0);
  for (int k = f.order(); k >= 0; --k) acc = acc * z + f.coeffs()[k];
  return acc;
}

double boundary_sup(Cx slope, Cx offset) {
  double worst = 0.0;
  for (int j = 0; j < kBoundaryGrid; ++j) {
    const double t = 2.0 * std::numbers::pi * j / kBoundaryGrid;
    worst = std::max(worst, std::abs(slope * std::polar(1.0, t) + offset));
  }
  return worst;
}

}  // namespace

void validate_symbol(const SymbolSpec& s) {
  if (const auto* aff = std::get_if<AffineSymbol>(&s)) {
    if (boundary_sup(aff->slope, aff->offset) >= 1.0 + kSelfMapSlack)
      throw domain_error("affine symbol is not a self-map of the disk");
  } else if (const auto* bp = std::get_if<BlaschkePairSymbol>(&s)) {
    const double m = std::abs(bp->multiplier);
    if (!(m > 0.0 && m < 1.0))
      throw domain_error("multiplier must satisfy 0 < |multiplier| < 1");
  } else if (const auto* cu = std::get_if<CustomSymbol>(&s)) {
    if (std::abs(cu->series.coeffs()[0]) >= 1.0 - kComposeMargin)
      throw domain_error("custom symbol sends 0 too close to the unit circle");
  } else if (const auto* rot = std::get_if<RotationSymbol>(&s)) {
    if (!std::isfinite(rot->angle)) throw domain_error("rotation angle is not finite");
  }
  // AutomorphismSymbol: DiskPoint already guarantees validity.
}

namespace {

TaylorSeries automorphism_series(Cx a, int order) {
  // (a - z)/(1 - conj(a) z) = a - (1 - |a|^2) sum_{k>=1} conj(a)^{k-1} z^k.
  const Cx ac = std::conj(a);
  const double w = 1.0 - std::norm(a);
  std::vector<Cx> c(order + 1, Cx(0.0, 0.0));
  c[0] = a;
  Cx p(1.0, 0.0);
  for (int k = 1; k <= order; ++k) {
    c[k] = -w * p;
    p *= ac;
  }
  return TaylorSeries(std::move(c));
}

}  // namespace

TaylorSeries symbol_series(const SymbolSpec& s, int order) {
  validate_symbol(s);
  if (const auto* aff = std::get_if<AffineSymbol>(&s)) {
    if (order < 1) throw usage_error("order too small for an affine symbol");
    return TaylorSeries::linear(aff->offset, aff->slope, order);
  }
  if (const auto* au = std::get_if<AutomorphismSymbol>(&s))
    return automorphism_series(au->center.value(), order);
  if (const auto* bp = std::get_if<BlaschkePairSymbol>(&s)) {
    const TaylorSeries inner = automorphism_series(bp->center.value(), order);
    const TaylorSeries scaled = scale(inner, bp->multiplier);
    const TaylorSeries outer = automorphism_series(bp->center.value(), order);
    return compose(outer, scaled);
  }
  if (const auto* rot = std::get_if<RotationSymbol>(&s)) {
    if (order < 1) throw usage_error("order too small for a rotation symbol");
    return TaylorSeries::linear(Cx(0.0, 0.0), std::polar(1.0, rot->angle), order);
  }
  return std::get<CustomSymbol>(s).series.truncated(order);
}

namespace {

FixedPointResult newton_fixed_point(const TaylorSeries& phi) {
  const TaylorSeries dphi = differentiate(phi);
  Cx z(0.0, 0.0);
  double resid = std::abs(eval_unchecked(phi, z) - z);
  int steps = 0;
  while (resid > kNewtonTol && steps < kNewtonMaxSteps) {
    const Cx f = eval_unchecked(phi, z) - z;
    const Cx fp = eval_unchecked(dphi, z) - Cx(1.0, 0.0);
    if (std::abs(fp) < 1e-300)
      throw convergence_error("Newton derivative vanished at the iterate", resid);
    z -= f / fp;
    ++steps;
    if (std::abs(z) >= 1.0)
      throw convergence_error("Newton iterate left the closed disk", std::abs(z));
    resid = std::abs(eval_unchecked(phi, z) - z);
  }
  if (resid > kNewtonTol)
    throw convergence_error("fixed-point Newton did not converge", resid);
  const Cx lambda = eval_unchecked(dphi, z);
  const double m = std::abs(lambda);
  FixedPointResult out{DiskPoint(z), lambda, m > 1e-14 && m < 1.0 - 1e-12, steps};
  return out;
}

}  // namespace

FixedPointResult fixed_point(const SymbolSpec& s, int order) {
  validate_symbol(s);
  if (const auto* aff = std::get_if<AffineSymbol>(&s)) {
    const Cx one(1.0, 0.0);
    if (std::abs(aff->slope - one) < 1e-15) {
      if (std::abs(aff->offset) > 0.0)
        throw domain_error("affine symbol with slope 1 has no interior fixed point");
      return {DiskPoint(Cx(0.0, 0.0)), one, false, 0};  // identity map
    }
    const Cx a = aff->offset / (one - aff->slope);
    if (std::abs(a) >= 1.0)
      throw domain_error("affine fixed point lies outside the open disk");
    const double m = std::abs(aff->slope);
    return {DiskPoint(a), aff->slope, m > 1e-14 && m < 1.0 - 1e-12, 0};
  }
  if (const auto* bp = std::get_if<BlaschkePairSymbol>(&s))
    return {bp->center, bp->multiplier, true, 0};
  if (const auto* rot = std::get_if<RotationSymbol>(&s))
    return {DiskPoint(Cx(0.0, 0.0)), std::polar(1.0, rot->angle), false, 0};
  return newton_fixed_point(symbol_series(s, order));
}

namespace {

double parse_number(const std::string& tok) {
  if (tok.empty()) throw usage_error("empty number in symbol spec");
  const char* begin = tok.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + tok.size() || !std::isfinite(v))
    throw usage_error("bad number in symbol spec: '" + tok + "'");
  return v;
}

std::vector<double> parse_numbers(const std::string& body, size_t expected) {
  std::vector<double> out;
  std::string tok;
  std::istringstream in(body);
  while (std::getline(in, tok, ',')) out.push_back(parse_number(tok));
  if (out.size() != expected)
    throw usage_error("symbol spec needs " + std::to_string(expected) +
                      " numbers, got " + std::to_string(out.size()));
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

SymbolSpec parse_symbol(const std::string& text, int order) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw usage_error("symbol spec needs the form family:args, got '" + text + "'");
  const std::string family = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  SymbolSpec spec = [&]() -> SymbolSpec {
    if (family == "affine") {
      const auto v = parse_numbers(body, 4);
      return AffineSymbol{Cx(v[0], v[1]), Cx(v[2], v[3])};
    }
    if (family == "auto") {
      const auto v = parse_numbers(body, 2);
      return AutomorphismSymbol{DiskPoint(Cx(v[0], v[1]))};
    }
    if (family == "bpair") {
      const auto v = parse_numbers(body, 4);
      return BlaschkePairSymbol{DiskPoint(Cx(v[0], v[1])), Cx(v[2], v[3])};
    }
    if (family == "rot") {
      const auto v = parse_numbers(body, 1);
      return RotationSymbol{v[0]};
    }
    if (family == "file") {
      if (body.empty()) throw usage_error("file: symbol needs a path");
      return CustomSymbol{load_series_json(body).truncated(order)};
    }
    throw usage_error("unknown symbol family '" + family + "'");
  }();
  validate_symbol(spec);
  return spec;
}

std::string describe_symbol(const SymbolSpec& s) {
  if (const auto* aff = std::get_if<AffineSymbol>(&s))
    return "affine:" + fmt(aff->slope.real()) + "," + fmt(aff->slope.imag()) + "," +
           fmt(aff->offset.real()) + "," + fmt(aff->offset.imag());
  if (const auto* au = std::get_if<AutomorphismSymbol>(&s))
    return "auto:" + fmt(au->center.value().real()) + "," + fmt(au->center.value().imag());
  if (const auto* bp = std::get_if<BlaschkePairSymbol>(&s))
    return "bpair:" + fmt(bp->center.value().real()) + "," + fmt(bp->center.value().imag()) +
           "," + fmt(bp->multiplier.real()) + "," + fmt(bp->multiplier.imag());
  if (const auto* rot = std::get_if<RotationSymbol>(&s))
    return "rot:" + fmt(rot->angle);
  return "custom:order=" + std::to_string(std::get<CustomSymbol>(s).series.order());
}

}  // namespace koenigslab
