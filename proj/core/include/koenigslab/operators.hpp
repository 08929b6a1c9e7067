#ifndef KOENIGSLAB_OPERATORS_HPP
#define KOENIGSLAB_OPERATORS_HPP

#include <Eigen/Dense>
#include <vector>

#include "koenigslab/symbols.hpp"

namespace koenigslab {

/// Matrix of a linear operator in the monomial basis 1, z, z^2, ...:
/// column j holds the coefficients of the image of z^j. Square,
/// (order+1) x (order+1). Only the top-left block, of size set by the
/// caller, is meaningful for operators that mix high and low modes: the
/// truncation corrupts columns near the order.
struct OperatorMatrix {
  explicit OperatorMatrix(Eigen::MatrixXcd m);

  int order() const noexcept { return static_cast<int>(entries.rows()) - 1; }
  Eigen::MatrixXcd entries;
};

/// Conjugate-linear map f -> A * conj(f) stored by its linear part A.
/// For genuine conjugations A is unitary (isometry) and A * conj(A) = I
/// (involution); the defect helpers below measure both on a block.
struct ConjugationRep {
  explicit ConjugationRep(Eigen::MatrixXcd m);

  int order() const noexcept { return static_cast<int>(linear_part.rows()) - 1; }
  Eigen::MatrixXcd linear_part;
};

/// Matrix of f -> f o phi. Column j is the truncated j-th power of the
/// symbol's series, so columns are exact for polynomial symbols and carry
/// only tail truncation otherwise.
OperatorMatrix composition_matrix(const SymbolSpec& s, int order);

/// Matrix of f -> h * f: lower-triangular Toeplitz in the coefficients of h.
OperatorMatrix multiplication_matrix(const TaylorSeries& h);

/// Coefficient conjugation J(sum a_k z^k) = sum conj(a_k) z^k. Linear part
/// is the identity.
ConjugationRep coefficient_conjugation(int order);

/// The kernel conjugation at a real point a in (-1,1): coefficient
/// conjugation composed with multiplication by the normalized evaluation
/// kernel at a and with composition by the involutive automorphism at a.
/// Reduces to J at a = 0 up to the parity flip diag((-1)^k).
ConjugationRep kernel_conjugation(double a, int order);

/// Conjugate a conjugation by the rotation semigroup: the returned rep is
/// U_theta^* J U_theta with U_theta f(z) = f(e^{i theta} z).
ConjugationRep rotated_conjugation(const ConjugationRep& j, double theta);

/// Frobenius norm of (A conj(M) - M^H A) on the top-left block: zero iff
/// J T = T* J holds on the modes the block sees. block must satisfy
/// 2*block <= order.
double csym_defect(const OperatorMatrix& m, const ConjugationRep& j, int block);

double conjugation_isometry_defect(const ConjugationRep& j, int block);
double conjugation_involution_defect(const ConjugationRep& j, int block);
/// A^T vs A; symmetric linear parts characterize isometric involutions.
double conjugation_symmetry_defect(const ConjugationRep& j, int block);

/// Change of basis whose leading columns are the given series and whose
/// remaining columns are identity: for a triangular family (column n
/// supported on rows <= n) the result is block [S 0; 0 I]. Requires
/// basis.size() <= order and every member at the given order.
Eigen::MatrixXcd similarity_matrix(const std::vector<TaylorSeries>& basis, int order);

/// S diag(d, 1, ..., 1) S^{-1}: the operator that is diagonal on the given
/// basis with the given leading eigenvalues and identity beyond it.
/// Triangular bases invert by back-substitution, general ones by LU; either
/// way the 1-norm condition estimate must stay below 1e12 or the result is
/// refused as ill conditioned.
OperatorMatrix commutant_diag_operator(const std::vector<TaylorSeries>& basis,
                                       const std::vector<Cx>& diag, int order);

/// M^n by repeated multiplication, n >= 0.
OperatorMatrix operator_power(const OperatorMatrix& m, int n);

TaylorSeries apply_operator(const OperatorMatrix& m, const TaylorSeries& f);
TaylorSeries apply_conjugation(const ConjugationRep& j, const TaylorSeries& f);

Eigen::VectorXcd to_vector(const TaylorSeries& f);
TaylorSeries series_from_vector(const Eigen::VectorXcd& v);

}  // namespace koenigslab

#endif  // KOENIGSLAB_OPERATORS_HPP
