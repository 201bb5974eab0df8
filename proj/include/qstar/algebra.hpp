#pragma once

#include <optional>
#include <vector>

#include "qstar/bilinear.hpp"
#include "qstar/report.hpp"

namespace qstar {

/// A *-algebra on coordinates: structure constants C with
/// (x y)_k = sum_{ij} C[i,j,k] x_i y_j, an involution x* = J conj(x), and an
/// optional unit vector.
class StarAlgebraModel {
 public:
  StarAlgebraModel(std::vector<Mat> structure, Mat involution, std::optional<Vec> unit = {});

  int dim() const { return dim_; }
  /// structure(k)(i,j) = C[i,j,k]
  const Mat& structure(int k) const { return structure_[k]; }
  const std::vector<Mat>& structure_tensor() const { return structure_; }
  const Mat& involution() const { return involution_; }
  const std::optional<Vec>& unit() const { return unit_; }
  bool unital() const { return unit_.has_value(); }

  Vec multiply(const Vec& x, const Vec& y) const;
  Vec star(const Vec& x) const { return involution_ * x.conjugate(); }

  /// Matrix of a -> x a.
  Mat left_mult(const Vec& x) const;
  /// Matrix of a -> a x.
  Mat right_mult(const Vec& x) const;

  Report validate(double tol = kAlgebraTol) const;

 private:
  int dim_;
  std::vector<Mat> structure_;
  Mat involution_;
  std::optional<Vec> unit_;
};

/// The (A, A0) model: one coordinate space, the coarse norm on A, with A0
/// carrying the multiplier norm derived from the module actions. A proper
/// dense subspace cannot exist at a fixed finite dimension, so density is
/// exercised through grid-refinement families instead.
struct QuasiPair {
  StarAlgebraModel algebra;
  NormSpec normA;
  std::string label;

  int dim() const { return algebra.dim(); }
};

enum class Side { Left, Right };

Vec multiply(const StarAlgebraModel& alg, const Vec& x, const Vec& y);

/// Module action x.a (left) or a.x (right); same contraction as multiply on
/// the shared coordinate space.
Vec module_action(const QuasiPair& pair, Side side, const Vec& x, const Vec& a);

struct OperatorMatrix {
  Mat matrix;
  NormSpec domain_norm;
  NormSpec codomain_norm;

  OperatorMatrix(Mat m, NormSpec dom, NormSpec cod)
      : matrix(std::move(m)), domain_norm(std::move(dom)), codomain_norm(std::move(cod)) {
    if (matrix.cols() != domain_norm.dim() || matrix.rows() != codomain_norm.dim())
      throw DimensionError("OperatorMatrix: dimensions inconsistent with norms");
  }
};

OpNormResult operator_norm(const OperatorMatrix& t, const AscentOptions& opt = {});

/// Multiplier norm max(|L_x|, |R_x|) of x with respect to the pair's norm.
OpNormResult a0_norm(const QuasiPair& pair, const Vec& x, const AscentOptions& opt = {});

double eval_norm(const NormSpec& spec, const Vec& v);
NormSpec dual_norm(const NormSpec& spec);

/// Adjoin a unit: dimension n+1, |(a,lambda)| = |a|_A + |lambda|; the old
/// coordinates keep their norm. Rejects already-unital pairs.
QuasiPair unitize(const QuasiPair& pair);

/// Rescale the norm so the unit has norm one; no-op for non-unital pairs or
/// when already normalized. Returns whether a rescale happened.
bool normalize_unit_norm(QuasiPair& pair);

Report validate_quasi_pair(const QuasiPair& pair, int samples = 24, double tol = kAlgebraTol,
                           std::uint64_t seed = kDefaultSeed);

}  // namespace qstar
