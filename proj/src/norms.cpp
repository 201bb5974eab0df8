#include "qstar/norms.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace qstar {

namespace {

/// Hermitian square root and inverse square root via eigendecomposition.
void hermitian_roots(const Mat& g, Mat& sqrt, Mat& inv_sqrt) {
  Eigen::SelfAdjointEigenSolver<Mat> es(g);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  const RVec lam = es.eigenvalues();
  if (lam.minCoeff() <= 0.0)
    throw std::invalid_argument("Gram matrix must be positive definite");
  RVec s = lam.array().sqrt();
  sqrt = es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
  inv_sqrt = es.eigenvectors() * s.cwiseInverse().asDiagonal() * es.eigenvectors().adjoint();
}

double plain_p_eval(const Vec& v, double p) {
  if (std::isinf(p)) return v.cwiseAbs().maxCoeff();
  if (p == 1.0) return v.cwiseAbs().sum();
  if (p == 2.0) return v.norm();
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v(i)), p);
  return std::pow(s, 1.0 / p);
}

/// argmax over the plain lp unit ball of |u^T v|; value is |v|_q.
Vec plain_p_support(const Vec& v, double p) {
  const Eigen::Index n = v.size();
  Vec u = Vec::Zero(n);
  if (v.cwiseAbs().maxCoeff() == 0.0) {
    u(0) = 1.0;
    return u;
  }
  if (p == 1.0) {
    Eigen::Index k;
    v.cwiseAbs().maxCoeff(&k);
    u(k) = std::conj(csign(v(k)));
    return u;
  }
  if (std::isinf(p)) {
    for (Eigen::Index i = 0; i < n; ++i) u(i) = std::conj(csign(v(i)));
    return u;
  }
  const double q = dual_exponent(p);
  const double nq = plain_p_eval(v, q);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double a = std::abs(v(i));
    if (a > 0.0) u(i) = std::conj(csign(v(i))) * std::pow(a / nq, q / p);
  }
  return u;
}

}  // namespace

NormSpec NormSpec::p_norm(int dim, double p, double scale) {
  if (dim <= 0) throw DimensionError("p_norm: dim must be positive");
  if (p < 1.0) throw std::invalid_argument("p_norm: p must be >= 1");
  NormSpec n;
  n.kind_ = Kind::P;
  n.dim_ = dim;
  n.p_ = p;
  n.scale_ = scale;
  return n;
}

NormSpec NormSpec::weighted_p(double p, const RVec& weights, double scale) {
  if (p < 1.0) throw std::invalid_argument("weighted_p: p must be >= 1");
  if (weights.size() == 0 || weights.minCoeff() <= 0.0)
    throw std::invalid_argument("weighted_p: weights must be strictly positive");
  NormSpec n;
  n.kind_ = Kind::WeightedP;
  n.dim_ = static_cast<int>(weights.size());
  n.p_ = p;
  n.scale_ = scale;
  n.weights_ = weights;
  n.diag_ = std::isinf(p) ? weights : RVec(weights.array().pow(1.0 / p));
  return n;
}

NormSpec NormSpec::gram(const Mat& g, double scale) {
  if (g.rows() != g.cols() || g.rows() == 0) throw DimensionError("gram: square matrix required");
  if ((g - g.adjoint()).norm() > 1e-10 * std::max(1.0, g.norm()))
    throw std::invalid_argument("gram: matrix must be Hermitian");
  NormSpec n;
  n.kind_ = Kind::Gram;
  n.dim_ = static_cast<int>(g.rows());
  n.scale_ = scale;
  n.gram_ = (g + g.adjoint()) / 2.0;
  hermitian_roots(n.gram_, n.gram_sqrt_, n.gram_inv_sqrt_);
  return n;
}

NormSpec NormSpec::unitize(const NormSpec& inner) {
  NormSpec n;
  n.kind_ = Kind::Unitize1;
  n.dim_ = inner.dim() + 1;
  n.inner_ = std::make_shared<const NormSpec>(inner);
  return n;
}

NormSpec NormSpec::unitize_sup(const NormSpec& inner) {
  NormSpec n;
  n.kind_ = Kind::UnitizeSup;
  n.dim_ = inner.dim() + 1;
  n.inner_ = std::make_shared<const NormSpec>(inner);
  return n;
}

NormSpec NormSpec::custom(int dim, CustomNorm hooks, double scale) {
  if (!hooks.eval) throw std::invalid_argument("custom norm needs an evaluator");
  NormSpec n;
  n.kind_ = Kind::Custom;
  n.dim_ = dim;
  n.scale_ = scale;
  n.custom_ = std::make_shared<const CustomNorm>(std::move(hooks));
  return n;
}

double NormSpec::eval(const Vec& v) const {
  if (v.size() != dim_) throw DimensionError("norm eval: dimension mismatch");
  switch (kind_) {
    case Kind::P:
      return scale_ * plain_p_eval(v, p_);
    case Kind::WeightedP:
      return scale_ * plain_p_eval(diag_.cast<Cplx>().asDiagonal() * v, p_);
    case Kind::Gram: {
      const double q = std::real(v.dot(gram_ * v));  // v^H G v
      return scale_ * std::sqrt(std::max(0.0, q));
    }
    case Kind::Unitize1:
      return inner_->eval(v.head(dim_ - 1)) + std::abs(v(dim_ - 1));
    case Kind::UnitizeSup:
      return std::max(inner_->eval(v.head(dim_ - 1)), std::abs(v(dim_ - 1)));
    case Kind::Custom:
      return scale_ * custom_->eval(v);
  }
  throw std::logic_error("unreachable");
}

bool NormSpec::has_dual() const {
  switch (kind_) {
    case Kind::Custom:
      return custom_->registered_dual != nullptr;
    case Kind::Unitize1:
    case Kind::UnitizeSup:
      return inner_->has_dual();
    default:
      return true;
  }
}

NormSpec NormSpec::dual() const {
  switch (kind_) {
    case Kind::P:
      return p_norm(dim_, dual_exponent(p_), 1.0 / scale_);
    case Kind::WeightedP: {
      const double q = dual_exponent(p_);
      RVec inv_diag = diag_.cwiseInverse();
      RVec wq = std::isinf(q) ? inv_diag : RVec(inv_diag.array().pow(q));
      return weighted_p(q, wq, 1.0 / scale_);
    }
    case Kind::Gram:
      // Bilinear-pairing dual of the G ball is the conj(G^-1) ball.
      return gram(gram_inv_sqrt_.conjugate() * gram_inv_sqrt_.conjugate(), 1.0 / scale_);
    case Kind::Unitize1:
      return unitize_sup(inner_->dual());
    case Kind::UnitizeSup:
      return unitize(inner_->dual());
    case Kind::Custom:
      if (custom_->registered_dual) {
        NormSpec d = *custom_->registered_dual;
        return d;
      }
      throw UnsupportedError("custom norm without a registered dual: " + custom_->tag);
  }
  throw std::logic_error("unreachable");
}

std::optional<Vec> NormSpec::support_point(const Vec& v) const {
  if (v.size() != dim_) throw DimensionError("support_point: dimension mismatch");
  switch (kind_) {
    case Kind::P:
      return Vec(plain_p_support(v, p_) / scale_);
    case Kind::WeightedP: {
      // |u| = scale * |D u|_p; pair against D^-1 v in the plain ball.
      Vec dv = diag_.cwiseInverse().cast<Cplx>().asDiagonal() * v;
      Vec u = plain_p_support(dv, p_);
      return Vec(diag_.cwiseInverse().cast<Cplx>().asDiagonal() * u / scale_);
    }
    case Kind::Gram: {
      Vec w = gram_inv_sqrt_.conjugate() * v;
      const double s = w.norm();
      if (s == 0.0) {
        Vec u = Vec::Unit(dim_, 0);
        return Vec(u / eval(u));
      }
      return Vec(gram_inv_sqrt_ * w.conjugate() / (s * scale_));
    }
    case Kind::Unitize1: {
      auto head = inner_->support_point(v.head(dim_ - 1));
      if (!head) return std::nullopt;
      const double head_value = std::real(head->transpose() * v.head(dim_ - 1));
      const double tail_value = std::abs(v(dim_ - 1));
      Vec u = Vec::Zero(dim_);
      if (head_value >= tail_value) {
        u.head(dim_ - 1) = *head;
      } else {
        u(dim_ - 1) = std::conj(csign(v(dim_ - 1)));
      }
      return u;
    }
    case Kind::UnitizeSup: {
      auto head = inner_->support_point(v.head(dim_ - 1));
      if (!head) return std::nullopt;
      Vec u(dim_);
      u.head(dim_ - 1) = *head;
      u(dim_ - 1) = std::conj(csign(v(dim_ - 1)));
      return u;
    }
    case Kind::Custom:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::vector<Vec>> NormSpec::ball_atoms() const {
  if (kind_ == Kind::P && p_ == 1.0) {
    std::vector<Vec> atoms;
    for (int i = 0; i < dim_; ++i) atoms.push_back(Vec::Unit(dim_, i) / scale_);
    return atoms;
  }
  if (kind_ == Kind::WeightedP && p_ == 1.0) {
    std::vector<Vec> atoms;
    for (int i = 0; i < dim_; ++i) atoms.push_back(Vec::Unit(dim_, i) / (diag_(i) * scale_));
    return atoms;
  }
  if (kind_ == Kind::Unitize1) {
    auto head = inner_->ball_atoms();
    if (!head) return std::nullopt;
    std::vector<Vec> atoms;
    for (const Vec& a : *head) {
      Vec u = Vec::Zero(dim_);
      u.head(dim_ - 1) = a;
      atoms.push_back(u);
    }
    atoms.push_back(Vec::Unit(dim_, dim_ - 1));
    return atoms;
  }
  return std::nullopt;
}

std::optional<Mat> NormSpec::euclidean_gram() const {
  const double s2 = scale_ * scale_;
  if (kind_ == Kind::Gram) return Mat(s2 * gram_);
  if (kind_ == Kind::P && p_ == 2.0) return Mat(s2 * Mat::Identity(dim_, dim_));
  if (kind_ == Kind::WeightedP && p_ == 2.0)
    return Mat(s2 * weights_.cast<Cplx>().asDiagonal().toDenseMatrix());
  return std::nullopt;
}

double NormSpec::l2_radius() const {
  switch (kind_) {
    case Kind::P: {
      // max |u|_2 with |u|_p <= 1
      const double r = p_ <= 2.0 ? 1.0 : std::pow(dim_, 0.5 - 1.0 / p_);
      return r / scale_;
    }
    case Kind::WeightedP: {
      const double r = p_ <= 2.0 ? 1.0 : std::pow(dim_, 0.5 - 1.0 / p_);
      return r / (diag_.minCoeff() * scale_);
    }
    case Kind::Gram: {
      Eigen::SelfAdjointEigenSolver<Mat> es(gram_);
      return 1.0 / (std::sqrt(es.eigenvalues().minCoeff()) * scale_);
    }
    case Kind::Unitize1:
      return std::max(inner_->l2_radius(), 1.0);
    case Kind::UnitizeSup:
      return std::sqrt(inner_->l2_radius() * inner_->l2_radius() + 1.0);
    case Kind::Custom:
      return std::numeric_limits<double>::infinity();
  }
  return std::numeric_limits<double>::infinity();
}

Vec NormSpec::sample_sphere(Rng& rng) const {
  Vec v = rng.cvector(dim_);
  const double n = eval(v);
  if (n <= 0.0) return sample_sphere(rng);
  return v / n;
}

Vec NormSpec::sample_dual_point(Rng& rng) const {
  if (kind_ == Kind::Custom) {
    if (!custom_->dual_sample)
      throw UnsupportedError("custom norm without a dual-ball sampler: " + custom_->tag);
    return custom_->dual_sample(rng) / scale_;
  }
  return dual().sample_sphere(rng);
}

}  // namespace qstar
