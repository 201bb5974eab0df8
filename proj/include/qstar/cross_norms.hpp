#pragma once

#include <variant>

#include "qstar/algebra.hpp"

namespace qstar {

/// z = sum_ij coeff(i,j) e_i (x) f_j in the fixed row-major pair ordering.
/// The coefficient matrix is decomposition independent.
struct TensorElement {
  Mat coeff;
  NormSpec left_norm;
  NormSpec right_norm;

  TensorElement(Mat m, NormSpec l, NormSpec r)
      : coeff(std::move(m)), left_norm(std::move(l)), right_norm(std::move(r)) {
    if (coeff.rows() != left_norm.dim() || coeff.cols() != right_norm.dim())
      throw DimensionError("TensorElement: coefficient/norm dimension mismatch");
  }

  static TensorElement elementary(const Vec& x, const Vec& y, NormSpec l, NormSpec r) {
    return TensorElement(Mat(x * y.transpose()), std::move(l), std::move(r));
  }
};

enum class CrossNormKind { Lambda, Gamma, Hilbert };

/// Maximizing dual pair for the injective norm.
struct DualPairCertificate {
  Vec f, g;
};

/// Decomposition attaining the upper bound plus the dual bilinear form
/// backing the lower bound of the projective norm.
struct DecompositionCertificate {
  std::vector<Vec> xs, ys;
  Mat dual_form;  // |x^T B y| <= |x||y|, <B, M> backs the lower bound
};

struct CrossNormResult {
  double value = 0.0;
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  bool converged = false;
  int restarts = 0;
  std::variant<std::monostate, DualPairCertificate, DecompositionCertificate> certificate;

  double gap() const { return upper - lower; }
};

/// Injective cross-norm: sup over the two dual unit balls of |f^T M g|.
/// `value` = `lower` is certified by the (f, g) pair; exact whenever
/// bilinear_sup is (inner-product factors, or a factor with an atomic dual).
CrossNormResult injective_norm(const TensorElement& z, const AscentOptions& opt = {});

/// Projective cross-norm: infimum of sum |x_i||y_i| over decompositions.
/// `value` = `upper` comes from the best decomposition found; `lower` from a
/// dual bilinear form. Closed forms: an l1-type factor (weighted row/column
/// sums) and inner-product factors (nuclear norm of the Gram-transformed
/// coefficient matrix).
CrossNormResult projective_norm(const TensorElement& z, const AscentOptions& opt = {});

/// Hilbert cross-norm sqrt(vec(M)^H (G1 (x) G2) vec(M)); requires
/// inner-product factor norms.
double hilbert_norm(const TensorElement& z);

double cross_norm_value(CrossNormKind kind, const TensorElement& z, const AscentOptions& opt = {});

/// Dense-grid maximization over the dual spheres followed by an independent
/// local refinement; within O(1/grid_density) of the injective norm. Requires
/// n*m <= 9.
double injective_norm_bruteforce(const TensorElement& z, int grid_density);

/// Checks lambda(z) - tol <= candidate(z) <= gamma(z) + tol with certified
/// bounds on both sides.
Report check_compatibility_sandwich(const TensorElement& z,
                                    const std::function<double(const TensorElement&)>& candidate,
                                    double tol = kOptTol, const AscentOptions& opt = {});

/// NormSpec view of a cross-norm on the n*m tensor coordinates. Hilbert gives
/// a genuine Gram norm; lambda/gamma give custom norms with registered duals
/// (the dual of lambda is gamma of the dual factors and vice versa).
NormSpec cross_norm_spec(CrossNormKind kind, const NormSpec& left, const NormSpec& right,
                         const AscentOptions& opt = {});

/// Kronecker-product operator on tensor coordinates, carrying the cross-norm
/// on both sides.
OperatorMatrix tensor_operator(const OperatorMatrix& t1, const OperatorMatrix& t2,
                               CrossNormKind kind, const AscentOptions& opt = {});

struct UniformityReport {
  Report report;
  double op_norm_product = 0.0;   // |T1| |T2|
  double tensor_op_norm = 0.0;    // computed |T1 (x) T2| under the cross-norm
  bool exact = false;             // true when the Euclidean oracle applied
  std::optional<Vec> violation;   // tensor coordinates exceeding the product
};

/// Verifies |T1 (x) T2| = |T1| |T2| for the given cross-norm: the product is
/// a certified lower bound through the elementary tensor of the two
/// maximizers, ascent searches for elements exceeding it, and for
/// inner-product factors the exact operator-norm oracle applies.
UniformityReport check_uniformity(const OperatorMatrix& t1, const OperatorMatrix& t2,
                                  CrossNormKind kind, double tol = kOptTol,
                                  const AscentOptions& opt = {});

}  // namespace qstar
