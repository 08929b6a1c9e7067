#include "koenigslab/csym.hpp"

#include <cmath>

#include "koenigslab/kernels.hpp"

namespace koenigslab {

namespace {

constexpr double kEigTargetSeparation = 1e-8;

void check_sequence(const std::vector<TaylorSeries>& seq) {
  if (seq.empty()) throw usage_error("empty function sequence");
  for (const TaylorSeries& f : seq)
    if (f.order() != seq.front().order())
      throw usage_error("sequence members have mixed truncation orders");
}

Eigen::MatrixXcd sequence_matrix(const std::vector<TaylorSeries>& seq) {
  Eigen::MatrixXcd v(seq.front().size(), seq.size());
  for (size_t n = 0; n < seq.size(); ++n) v.col(static_cast<Eigen::Index>(n)) = to_vector(seq[n]);
  return v;
}

/// Residual b - S*x accumulated in 80-bit arithmetic. Power sequences are
/// badly column-scaled, so the double-precision product floor eps*|S||x| sits
/// orders of magnitude above the representable residual; evaluating in
/// extended precision both unsticks iterative refinement and lets the
/// reported norm reflect the actual defect instead of evaluation noise.
Eigen::VectorXcd extended_residual(const Eigen::MatrixXcd& s,
                                   const Eigen::VectorXcd& x,
                                   const Eigen::VectorXcd& b) {
  using Lx = std::complex<long double>;
  Eigen::VectorXcd r(s.rows());
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    Lx acc(b(i).real(), b(i).imag());
    for (Eigen::Index j = 0; j < s.cols(); ++j)
      acc -= Lx(s(i, j).real(), s(i, j).imag()) * Lx(x(j).real(), x(j).imag());
    r(i) = Cx(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  }
  return r;
}

/// Index of the eigenvalue nearest the target; refuses ambiguous matches.
Eigen::Index match_eigenvalue(const Eigen::VectorXcd& eigs, Cx target) {
  Eigen::Index best = 0;
  double best_d = std::abs(eigs(0) - target);
  for (Eigen::Index i = 1; i < eigs.size(); ++i) {
    const double d = std::abs(eigs(i) - target);
    if (d < best_d) {
      best = i;
      best_d = d;
    }
  }
  return best;
}

}  // namespace

std::string to_string(Verdict v) {
  return v == Verdict::consistent ? "consistent" : "not_complex_symmetric";
}

NecessaryConditionReport necessary_condition_test(const SymbolSpec& s, int order,
                                                  double decision_tol) {
  if (!(decision_tol > 0.0)) throw usage_error("decision tolerance must be positive");
  const KoenigsResult kr = koenigs_iterate(s, order);
  const TaylorSeries sigma_hat = renormalize_unit_norm(kr.sigma);

  NecessaryConditionReport out;
  out.lhs = std::abs(sigma_hat.coeff(0));
  out.fixed_point = kr.fixed_point.value();
  out.multiplier = kr.multiplier;
  const double r = std::abs(out.fixed_point);
  if (r < 1e-14) {
    out.rhs = 0.0;  // kernel at the origin: K' vanishes there
  } else {
    const KernelClosedForms cf = kernel_closed_forms(r);
    out.rhs = cf.k1_at_a / (cf.norm_k * cf.norm_k1);
  }
  out.gap = std::abs(out.lhs - out.rhs);
  out.verdict = out.gap > decision_tol ? Verdict::not_complex_symmetric
                                       : Verdict::consistent;
  return out;
}

GramReport conjugate_gram(const ConjugationRep& j,
                          const std::vector<TaylorSeries>& seq) {
  check_sequence(seq);
  if (seq.front().order() != j.order())
    throw usage_error("conjugation and sequence truncation orders differ");
  const Eigen::MatrixXcd v = sequence_matrix(seq);
  const Eigen::MatrixXcd w = j.linear_part * v.conjugate();
  // G(n, m) = <w_n, v_m> = sum_k w(k, n) conj(v(k, m)).
  const Eigen::MatrixXcd g = (v.adjoint() * w).transpose();

  GramReport out{g, 0.0, 0.0};
  double min_diag = std::abs(g(0, 0));
  double max_off = 0.0;
  for (Eigen::Index n = 0; n < g.rows(); ++n)
    for (Eigen::Index m = 0; m < g.cols(); ++m) {
      if (n == m)
        min_diag = std::min(min_diag, std::abs(g(n, m)));
      else
        max_off = std::max(max_off, std::abs(g(n, m)));
    }
  out.max_offdiag = max_off;
  out.min_absdiag = min_diag;
  return out;
}

double completeness_residual(const std::vector<TaylorSeries>& seq, int k) {
  check_sequence(seq);
  const int order = seq.front().order();
  if (k < 0 || 2 * k > order)
    throw usage_error("monomial degree outside the trustworthy half of the truncation");
  const Eigen::MatrixXcd s = sequence_matrix(seq);
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(order + 1);
  b(k) = Cx(1.0, 0.0);
  const auto qr = s.colPivHouseholderQr();
  Eigen::VectorXcd x = qr.solve(b);
  // Mixed-precision iterative refinement on the same factorization: the raw
  // QR residual of a consistent system sits at eps * cond(S), and the
  // extended-precision residual keeps each correction (and the reported
  // norm) from being dominated by double-precision evaluation noise.
  Eigen::VectorXcd r = extended_residual(s, x, b);
  for (int sweep = 0; sweep < 3; ++sweep) {
    x += qr.solve(r);
    r = extended_residual(s, x, b);
  }
  return r.norm();
}

KernelExpansion kernel_eigen_expansion(const SymbolSpec& s, int n, int order,
                                       int block) {
  if (n < 0) throw usage_error("negative expansion order");
  if (n + 1 > block) throw usage_error("expansion order does not fit the spectral block");
  const FixedPointResult fp = fixed_point(s, order);
  if (!fp.schroeder)
    throw domain_error("kernel expansion needs a Schroeder model at the fixed point");
  const OperatorMatrix m = composition_matrix(s, order);
  if (2 * block > order)
    throw usage_error("block too large for the truncation order: need 2*block <= order");

  const Eigen::MatrixXcd badj = m.entries.topLeftCorner(block, block).adjoint();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(badj);
  if (es.info() != Eigen::Success)
    throw ill_conditioned_error("eigendecomposition of the adjoint block failed");

  // Targets conj(multiplier)^0..^n; refuse clustered targets up front.
  std::vector<Cx> targets(n + 1);
  Cx p(1.0, 0.0);
  for (int k = 0; k <= n; ++k) {
    targets[k] = p;
    p *= std::conj(fp.multiplier);
  }
  for (int i = 0; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      if (std::abs(targets[i] - targets[k]) < kEigTargetSeparation)
        throw ill_conditioned_error("adjoint eigenvalue targets are too clustered");

  Eigen::MatrixXcd v(block, n + 1);
  std::vector<Eigen::Index> used;
  for (int k = 0; k <= n; ++k) {
    const Eigen::Index idx = match_eigenvalue(es.eigenvalues(), targets[k]);
    for (Eigen::Index u : used)
      if (u == idx)
        throw ill_conditioned_error("two eigenvalue targets matched the same eigenvector");
    used.push_back(idx);
    v.col(k) = es.eigenvectors().col(idx);
  }

  const TaylorSeries kn = kernel_series(fp.location, n, order);
  const Eigen::VectorXcd rhs = to_vector(kn).head(block);
  const double rhs_norm = rhs.norm();
  if (!(rhs_norm > 0.0)) throw ill_conditioned_error("kernel head vanished");

  KernelExpansion out;
  out.coefficients = v.colPivHouseholderQr().solve(rhs);
  out.relative_residual = (v * out.coefficients - rhs).norm() / rhs_norm;
  return out;
}

CommutantCheck commutant_symmetry_check(const OperatorMatrix& a,
                                        const OperatorMatrix& m,
                                        const ConjugationRep& j, int block) {
  if (a.order() != m.order() || a.order() != j.order())
    throw usage_error("commutant check operands must share the truncation order");
  CommutantCheck out;
  out.commute_defect =
      (a.entries * m.entries - m.entries * a.entries).topLeftCorner(block, block).norm();
  out.csym_defect = koenigslab::csym_defect(a, j, block);
  return out;
}

double power_symmetry_check(const SymbolSpec& s, int n, const ConjugationRep& j,
                            int order, int block) {
  if (n < 1) throw usage_error("power must be at least 1");
  const OperatorMatrix m = composition_matrix(s, order);
  return csym_defect(operator_power(m, n), j, block);
}

double rotation_equivalence_check(DiskPoint a, Cx multiplier, int order, int block) {
  const double theta = std::arg(a.value());
  const DiskPoint radial{Cx(a.abs(), 0.0)};
  const OperatorMatrix ma =
      composition_matrix(BlaschkePairSymbol{a, multiplier}, order);
  const OperatorMatrix mr =
      composition_matrix(BlaschkePairSymbol{radial, multiplier}, order);
  if (2 * block > order)
    throw usage_error("block too large for the truncation order: need 2*block <= order");
  Eigen::VectorXcd u(order + 1);
  for (int k = 0; k <= order; ++k) u(k) = std::polar(1.0, theta * k);
  const Eigen::MatrixXcd lhs =
      u.asDiagonal() * ma.entries * u.conjugate().asDiagonal();
  return (lhs - mr.entries).topLeftCorner(block, block).norm();
}

std::vector<double> spectral_symmetry_defects(const OperatorMatrix& m,
                                              const ConjugationRep& j,
                                              Cx multiplier, int block, int k_max) {
  if (m.order() != j.order())
    throw usage_error("operator and conjugation truncation orders differ");
  if (k_max < 0) throw usage_error("negative eigenvalue index");
  if (k_max + 1 > block) throw usage_error("eigenvalue index does not fit the block");
  if (2 * block > m.order())
    throw usage_error("block too large for the truncation order: need 2*block <= order");

  const Eigen::MatrixXcd b = m.entries.topLeftCorner(block, block);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(b);
  if (es.info() != Eigen::Success)
    throw ill_conditioned_error("eigendecomposition of the composition block failed");

  std::vector<double> out(k_max + 1);
  Cx target(1.0, 0.0);
  for (int k = 0; k <= k_max; ++k) {
    const Eigen::Index idx = match_eigenvalue(es.eigenvalues(), target);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(m.order() + 1);
    v.head(block) = es.eigenvectors().col(idx);
    const Eigen::VectorXcd w = j.linear_part * v.conjugate();
    out[k] = (m.entries.adjoint() * w - std::conj(target) * w).norm();
    target *= multiplier;
  }
  return out;
}

}  // namespace koenigslab
