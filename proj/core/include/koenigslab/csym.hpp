#ifndef KOENIGSLAB_CSYM_HPP
#define KOENIGSLAB_CSYM_HPP

#include <string>
#include <vector>

#include "koenigslab/koenigs.hpp"
#include "koenigslab/operators.hpp"

namespace koenigslab {

enum class Verdict { consistent, not_complex_symmetric };
std::string to_string(Verdict v);

/// The necessary condition for a composition operator with a Schroeder
/// model to be complex symmetric: the unit-normalized Koenigs eigenfunction
/// must satisfy |sigma(0)| = |K'(a)| / (||K|| ||K'||) at the fixed point a.
/// Both sides are invariant under rotating the symbol, so the right side is
/// evaluated at |a| through the real closed forms.
struct NecessaryConditionReport {
  double lhs;        // |sigma_hat(0)|
  double rhs;        // |K'(a)| / (||K|| ||K'||)
  double gap;
  Verdict verdict;   // not_complex_symmetric iff gap > decision tolerance
  Cx fixed_point;
  Cx multiplier;
};

NecessaryConditionReport necessary_condition_test(const SymbolSpec& s, int order,
                                                  double decision_tol = 1e-4);

/// Gram matrix of a conjugation against a function sequence:
/// G(n, m) = <J f_n, f_m>. Conjugate-orthogonal families have diagonal G.
struct GramReport {
  Eigen::MatrixXcd gram;
  double max_offdiag;   // 0 for a single-element sequence
  double min_absdiag;
};

GramReport conjugate_gram(const ConjugationRep& j,
                          const std::vector<TaylorSeries>& seq);

/// Least-squares distance from the monomial z^k to the span of the given
/// sequence: near zero when the sequence spans the modes the monomial
/// lives in. k must stay in the trustworthy half of the truncation,
/// k <= order/2.
double completeness_residual(const std::vector<TaylorSeries>& seq, int k);

/// Expand the derivative-kernel vector at the fixed point in the
/// eigenvectors of the adjoint composition block for the eigenvalues
/// conj(multiplier)^0..conj(multiplier)^n. The n+1 eigenvalue targets must
/// be pairwise separated by at least 1e-8 or the matching is refused.
struct KernelExpansion {
  Eigen::VectorXcd coefficients;
  double relative_residual;
};

KernelExpansion kernel_eigen_expansion(const SymbolSpec& s, int n, int order,
                                       int block = 16);

/// Defects for "A commutes with M" and "A is J-symmetric", both measured on
/// the same top-left block. All three operands must share the order.
struct CommutantCheck {
  double commute_defect;
  double csym_defect;
};

CommutantCheck commutant_symmetry_check(const OperatorMatrix& a,
                                        const OperatorMatrix& m,
                                        const ConjugationRep& j, int block);

/// csym defect of the n-th power of the composition operator.
double power_symmetry_check(const SymbolSpec& s, int n, const ConjugationRep& j,
                            int order, int block);

/// || U M_a U^H - M_{|a|} || on the block, U = diag(e^{ik arg a}), where
/// M_a is the composition matrix of the Blaschke-pair symbol at (a,
/// multiplier). Zero in exact arithmetic: rotating the parameter is
/// unitarily trivial.
double rotation_equivalence_check(DiskPoint a, Cx multiplier, int order, int block);

/// For k = 0..k_max: take the eigenvector v of the top-left block of M
/// nearest the eigenvalue multiplier^k, form w = J v (zero-padded), and
/// report ||M^H w - conj(multiplier)^k w|| on the full vector. Small
/// defects witness that J maps eigenvectors of M to eigenvectors of M^H.
std::vector<double> spectral_symmetry_defects(const OperatorMatrix& m,
                                              const ConjugationRep& j,
                                              Cx multiplier, int block, int k_max);

}  // namespace koenigslab

#endif  // KOENIGSLAB_CSYM_HPP
