#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "qstar/types.hpp"

namespace qstar {

class NormSpec;

/// Hooks for a user-supplied norm: an evaluator and a sampler of extreme
/// points of the dual unit ball. A dual NormSpec may be registered; without
/// one, operations that need dual-ball structure report the norm as
/// unsupported.
struct CustomNorm {
  std::string tag;
  std::function<double(const Vec&)> eval;
  std::function<Vec(Rng&)> dual_sample;
  std::shared_ptr<const NormSpec> registered_dual;
};

/// A computable norm on a finite-dimensional complex coordinate space.
///
/// Kinds: plain p-norms, measure-weighted p-norms, inner-product (Gram)
/// norms, the unitization norm |(a,lambda)| = |a| + |lambda| together with its
/// dual, and custom evaluators. Duality is taken with respect to the bilinear
/// pairing f(x) = sum_i f_i x_i, which is how linear functionals act on a
/// complex space; for a Gram norm G the dual ball is the Gram conj(G^-1) ball
/// (plain G^-1 when G is real).
class NormSpec {
 public:
  enum class Kind { P, WeightedP, Gram, Unitize1, UnitizeSup, Custom };

  static NormSpec p_norm(int dim, double p, double scale = 1.0);
  /// (sum_i w_i |v_i|^p)^(1/p) for finite p, max_i w_i |v_i| for p = inf.
  static NormSpec weighted_p(double p, const RVec& weights, double scale = 1.0);
  static NormSpec gram(const Mat& g, double scale = 1.0);
  static NormSpec unitize(const NormSpec& inner);
  static NormSpec unitize_sup(const NormSpec& inner);
  static NormSpec custom(int dim, CustomNorm hooks, double scale = 1.0);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  double p() const { return p_; }
  const RVec& weights() const { return weights_; }
  const Mat& gram_matrix() const { return gram_; }
  double scale() const { return scale_; }
  const NormSpec& inner() const { return *inner_; }
  const CustomNorm& custom_hooks() const { return *custom_; }
  bool is_custom() const { return kind_ == Kind::Custom; }

  double eval(const Vec& v) const;

  /// Dual norm under the bilinear pairing. Throws UnsupportedError for custom
  /// norms without a registered dual.
  NormSpec dual() const;
  bool has_dual() const;

  /// argmax over the unit ball of |u^T v|; returns u with u^T v real,
  /// nonnegative and equal to the dual norm of v. Unavailable for custom
  /// norms.
  std::optional<Vec> support_point(const Vec& v) const;

  /// Extreme points of the unit ball modulo a scalar phase, when the ball has
  /// finitely many (the l1-type balls). Enumeration over these is exact.
  std::optional<std::vector<Vec>> ball_atoms() const;

  /// Gram matrix when the norm is induced by an inner product (covers kind
  /// Gram, p = 2, and weighted p = 2).
  std::optional<Mat> euclidean_gram() const;

  /// Certified bound on max |u|_2 over the unit ball; infinity for custom.
  double l2_radius() const;

  Vec sample_sphere(Rng& rng) const;
  Vec sample_dual_point(Rng& rng) const;
  bool same_space(const NormSpec& other) const { return dim_ == other.dim_; }

 private:
  NormSpec() = default;

  Kind kind_ = Kind::P;
  int dim_ = 0;
  double p_ = 2.0;
  double scale_ = 1.0;
  RVec weights_;  // measure weights for WeightedP
  RVec diag_;     // internal scaling d with |v| = scale * |D v|_p
  Mat gram_;
  Mat gram_sqrt_, gram_inv_sqrt_;  // cached factors for Gram kind
  std::shared_ptr<const NormSpec> inner_;
  std::shared_ptr<const CustomNorm> custom_;
};

inline double dual_exponent(double p) {
  if (p <= 1.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

}  // namespace qstar
