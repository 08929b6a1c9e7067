#include "koenigslab/operators.hpp"

#include <cmath>

namespace koenigslab {

namespace {

constexpr double kConditionLimit = 1e12;

void check_square(const Eigen::MatrixXcd& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw usage_error(std::string(what) + " must be square and non-empty");
  if (!m.allFinite()) throw usage_error(std::string(what) + " has non-finite entries");
}

void check_block(int block, int order) {
  if (block < 1) throw usage_error("block size must be positive");
  if (2 * block > order)
    throw usage_error("block too large for the truncation order: need 2*block <= order");
}

double l1_norm(const Eigen::MatrixXcd& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

OperatorMatrix::OperatorMatrix(Eigen::MatrixXcd m) : entries(std::move(m)) {
  check_square(entries, "operator matrix");
}

ConjugationRep::ConjugationRep(Eigen::MatrixXcd m) : linear_part(std::move(m)) {
  check_square(linear_part, "conjugation linear part");
}

OperatorMatrix composition_matrix(const SymbolSpec& s, int order) {
  const PowerTable table(symbol_series(s, order));
  Eigen::MatrixXcd m(order + 1, order + 1);
  for (int j = 0; j <= order; ++j) {
    const std::vector<Cx>& p = table.power(j).coeffs();
    for (int i = 0; i <= order; ++i) m(i, j) = p[i];
  }
  return OperatorMatrix(std::move(m));
}

OperatorMatrix multiplication_matrix(const TaylorSeries& h) {
  const int n = h.order();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (int j = 0; j <= n; ++j)
    for (int i = j; i <= n; ++i) m(i, j) = h.coeffs()[i - j];
  return OperatorMatrix(std::move(m));
}

ConjugationRep coefficient_conjugation(int order) {
  if (order < 0) throw usage_error("negative truncation order");
  return ConjugationRep(Eigen::MatrixXcd::Identity(order + 1, order + 1));
}

ConjugationRep kernel_conjugation(double a, int order) {
  if (!std::isfinite(a) || std::abs(a) >= 1.0)
    throw domain_error("kernel conjugation needs a real parameter in (-1,1)");
  const DiskPoint pa{Cx(a, 0.0)};
  // Normalized evaluation kernel: ||K_a||^2 = 1/(1-a^2).
  const TaylorSeries khat =
      scale(kernel_series(pa, 0, order), Cx(std::sqrt(1.0 - a * a), 0.0));
  const OperatorMatrix mult = multiplication_matrix(khat);
  const OperatorMatrix comp = composition_matrix(AutomorphismSymbol{pa}, order);
  // J (T C) f = conj(T C) conj(f); the linear part is the entrywise
  // conjugate of the product matrix.
  return ConjugationRep((mult.entries * comp.entries).conjugate());
}

ConjugationRep rotated_conjugation(const ConjugationRep& j, double theta) {
  if (!std::isfinite(theta)) throw domain_error("rotation angle is not finite");
  const int n = j.order();
  Eigen::VectorXcd p(n + 1);
  for (int k = 0; k <= n; ++k) p(k) = std::polar(1.0, -theta * k);
  // U^* (A conj(.)) U = diag(e^{-ik theta}) A diag(e^{-ik theta}) conj(.)
  return ConjugationRep(p.asDiagonal() * j.linear_part * p.asDiagonal());
}

double csym_defect(const OperatorMatrix& m, const ConjugationRep& j, int block) {
  if (m.order() != j.order())
    throw usage_error("operator and conjugation truncation orders differ");
  check_block(block, m.order());
  const Eigen::MatrixXcd lhs = j.linear_part * m.entries.conjugate();
  const Eigen::MatrixXcd rhs = m.entries.adjoint() * j.linear_part;
  return (lhs - rhs).topLeftCorner(block, block).norm();
}

double conjugation_isometry_defect(const ConjugationRep& j, int block) {
  check_block(block, j.order());
  const int n = j.order() + 1;
  const Eigen::MatrixXcd d =
      j.linear_part.adjoint() * j.linear_part - Eigen::MatrixXcd::Identity(n, n);
  return d.topLeftCorner(block, block).norm();
}

double conjugation_involution_defect(const ConjugationRep& j, int block) {
  check_block(block, j.order());
  const int n = j.order() + 1;
  const Eigen::MatrixXcd d =
      j.linear_part * j.linear_part.conjugate() - Eigen::MatrixXcd::Identity(n, n);
  return d.topLeftCorner(block, block).norm();
}

double conjugation_symmetry_defect(const ConjugationRep& j, int block) {
  check_block(block, j.order());
  const Eigen::MatrixXcd d = j.linear_part.transpose() - j.linear_part;
  return d.topLeftCorner(block, block).norm();
}

Eigen::MatrixXcd similarity_matrix(const std::vector<TaylorSeries>& basis, int order) {
  if (basis.empty()) throw usage_error("similarity basis is empty");
  if (static_cast<int>(basis.size()) > order)
    throw usage_error("similarity basis too long for the truncation order");
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Identity(order + 1, order + 1);
  for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
    if (basis[col].order() != order)
      throw usage_error("similarity basis member has the wrong truncation order");
    s.col(col) = to_vector(basis[col]);
  }
  return s;
}

OperatorMatrix commutant_diag_operator(const std::vector<TaylorSeries>& basis,
                                       const std::vector<Cx>& diag, int order) {
  if (diag.size() != basis.size())
    throw usage_error("diagonal length must match the basis length");
  const Eigen::MatrixXcd s = similarity_matrix(basis, order);
  Eigen::VectorXcd d = Eigen::VectorXcd::Ones(order + 1);
  for (size_t k = 0; k < diag.size(); ++k) d(static_cast<Eigen::Index>(k)) = diag[k];

  const int n = order + 1;
  Eigen::MatrixXcd sinv;
  if (s.isUpperTriangular())
    sinv = s.triangularView<Eigen::Upper>().solve(Eigen::MatrixXcd::Identity(n, n));
  else
    sinv = Eigen::PartialPivLU<Eigen::MatrixXcd>(s).solve(Eigen::MatrixXcd::Identity(n, n));

  const double cond = l1_norm(s) * l1_norm(sinv);
  if (!(cond <= kConditionLimit))  // negated to also catch NaN
    throw ill_conditioned_error("similarity too ill conditioned: cond_1 estimate " +
                                std::to_string(cond));
  return OperatorMatrix(s * d.asDiagonal() * sinv);
}

OperatorMatrix operator_power(const OperatorMatrix& m, int n) {
  if (n < 0) throw usage_error("operator power needs n >= 0");
  const int dim = m.order() + 1;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(dim, dim);
  for (int k = 0; k < n; ++k) acc = acc * m.entries;
  return OperatorMatrix(std::move(acc));
}

TaylorSeries apply_operator(const OperatorMatrix& m, const TaylorSeries& f) {
  if (m.order() != f.order())
    throw usage_error("operator and series truncation orders differ");
  return series_from_vector(m.entries * to_vector(f));
}

TaylorSeries apply_conjugation(const ConjugationRep& j, const TaylorSeries& f) {
  if (j.order() != f.order())
    throw usage_error("conjugation and series truncation orders differ");
  return series_from_vector(j.linear_part * to_vector(f).conjugate());
}

Eigen::VectorXcd to_vector(const TaylorSeries& f) {
  Eigen::VectorXcd v(f.size());
  for (int k = 0; k < f.size(); ++k) v(k) = f.coeffs()[k];
  return v;
}

TaylorSeries series_from_vector(const Eigen::VectorXcd& v) {
  if (v.size() == 0) throw usage_error("empty coefficient vector");
  std::vector<Cx> c(v.data(), v.data() + v.size());
  return TaylorSeries(std::move(c));
}

}  // namespace koenigslab
