#include "qstar/bilinear.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace qstar {

namespace {

double abs_pair(const Mat& m, const Vec& u, const Vec& v) {
  return std::abs((u.transpose() * m * v)(0));
}

/// Align phases so that u^T M v is real nonnegative.
void align_phase(const Mat& m, Vec& u, const Vec& v) {
  const Cplx val = (u.transpose() * m * v)(0);
  if (std::abs(val) > 0.0) u *= std::conj(csign(val));
}

double equivalence_upper(const Mat& m, const NormSpec& left, const NormSpec& right) {
  const double rl = left.l2_radius();
  const double rr = right.l2_radius();
  if (std::isinf(rl) || std::isinf(rr)) return std::numeric_limits<double>::infinity();
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0) * rl * rr;
}

std::vector<Vec> ascent_starts(const NormSpec& right, const AscentOptions& opt, Rng& rng) {
  std::vector<Vec> starts;
  const int n = right.dim();
  for (int i = 0; i < n; ++i) {
    Vec e = Vec::Unit(n, i);
    starts.push_back(e / right.eval(e));
  }
  if (auto atoms = right.ball_atoms()) {
    for (const Vec& a : *atoms) starts.push_back(a);
  }
  // Sign patterns cover the real extreme directions of torus-like balls;
  // enumeration is capped, past the cap random starts take over.
  if (n <= 8) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      Vec s(n);
      for (int i = 0; i < n; ++i) s(i) = (mask >> i) & 1 ? -1.0 : 1.0;
      starts.push_back(s / right.eval(s));
    }
  }
  for (int r = 0; r < opt.max_restarts; ++r) starts.push_back(right.sample_sphere(rng));
  return starts;
}

}  // namespace

BilinearSupResult bilinear_sup(const Mat& m, const NormSpec& left, const NormSpec& right,
                               const AscentOptions& opt) {
  if (m.rows() != left.dim() || m.cols() != right.dim())
    throw DimensionError("bilinear_sup: matrix/norm dimension mismatch");
  BilinearSupResult res;
  Rng rng(opt.seed);

  const auto gl = left.euclidean_gram();
  const auto gr = right.euclidean_gram();
  if (gl && gr) {
    // u = G1^{-1/2} conj(u~), v = G2^{-1/2} v~ reduces both balls to l2.
    Mat l_inv_sqrt, l_sqrt, r_inv_sqrt, r_sqrt;
    {
      Eigen::SelfAdjointEigenSolver<Mat> e1(*gl), e2(*gr);
      RVec s1 = e1.eigenvalues().array().sqrt();
      RVec s2 = e2.eigenvalues().array().sqrt();
      l_inv_sqrt = e1.eigenvectors() * s1.cwiseInverse().asDiagonal() * e1.eigenvectors().adjoint();
      r_inv_sqrt = e2.eigenvectors() * s2.cwiseInverse().asDiagonal() * e2.eigenvectors().adjoint();
    }
    Mat n = l_inv_sqrt.conjugate() * m * r_inv_sqrt;
    Eigen::JacobiSVD<Mat> svd(n, Eigen::ComputeThinU | Eigen::ComputeThinV);
    res.value = res.upper = svd.singularValues()(0);
    res.exact = res.converged = true;
    res.left = l_inv_sqrt * svd.matrixU().col(0).conjugate();
    res.right = r_inv_sqrt * svd.matrixV().col(0);
    align_phase(m, res.left, res.right);
    return res;
  }

  const auto atoms_l = left.ball_atoms();
  const auto atoms_r = right.ball_atoms();
  const bool left_supports = left.support_point(Vec::Zero(left.dim())).has_value();
  const bool right_supports = right.support_point(Vec::Zero(right.dim())).has_value();

  // Enumeration over a finite extreme set is exact when the opposite side has
  // an exact support step.
  auto enumerate_left = [&](const std::vector<Vec>& atoms) {
    for (const Vec& a : atoms) {
      Vec w = m.transpose() * a;
      Vec v = *right.support_point(w);
      const double val = abs_pair(m, a, v);
      if (val > res.value) {
        res.value = val;
        res.left = a;
        res.right = v;
      }
    }
  };
  if (atoms_l && right_supports) {
    enumerate_left(*atoms_l);
    res.upper = res.value;
    res.exact = res.converged = true;
    align_phase(m, res.left, res.right);
    return res;
  }
  if (atoms_r && left_supports) {
    BilinearSupResult sub = bilinear_sup(m.transpose(), right, left, opt);
    res = sub;
    std::swap(res.left, res.right);
    align_phase(m, res.left, res.right);
    return res;
  }

  res.upper = equivalence_upper(m, left, right);

  if (left_supports && right_supports) {
    // Alternating support-point ascent: each half step is an exact
    // maximization given the other side, so the value is nondecreasing.
    auto starts = ascent_starts(right, opt, rng);
    double second = 0.0;
    for (const Vec& v0 : starts) {
      Vec v = v0;
      Vec u;
      double val = 0.0;
      for (int it = 0; it < opt.max_iters; ++it) {
        u = *left.support_point(m * v);
        v = *right.support_point(m.transpose() * u);
        const double nv = abs_pair(m, u, v);
        if (nv <= val + opt.stall_tol) {
          val = std::max(val, nv);
          break;
        }
        val = nv;
      }
      ++res.restarts;
      if (val > res.value) {
        second = res.value;
        res.value = val;
        res.left = u;
        res.right = v;
      } else {
        second = std::max(second, val);
      }
    }
    // converged when several independent starts reach the same maximum
    res.converged = res.value == 0.0 ||
                    (second > 0.0 && (res.value - second) <= 1e-7 * std::max(1.0, res.value));
    align_phase(m, res.left, res.right);
    return res;
  }

  // At least one side is custom (sampling only).
  res.converged = false;
  for (int s = 0; s < opt.samples; ++s) {
    Vec u = left_supports ? Vec() : left.sample_sphere(rng);
    Vec v;
    if (!left_supports) {
      v = right_supports ? *right.support_point(m.transpose() * u) : right.sample_sphere(rng);
    } else {
      v = right.sample_sphere(rng);
      u = *left.support_point(m * v);
    }
    const double val = abs_pair(m, u, v);
    if (val > res.value) {
      res.value = val;
      res.left = u;
      res.right = v;
    }
  }
  if (res.left.size() > 0) align_phase(m, res.left, res.right);
  return res;
}

OpNormResult operator_norm_impl(const Mat& t, const NormSpec& domain, const NormSpec& codomain,
                                const AscentOptions& opt) {
  OpNormResult res;
  if (t.cols() != domain.dim() || t.rows() != codomain.dim())
    throw DimensionError("operator_norm: matrix/norm dimension mismatch");
  if (codomain.has_dual()) {
    BilinearSupResult bs = bilinear_sup(t, codomain.dual(), domain, opt);
    res.value = bs.value;
    res.upper = bs.upper;
    res.exact = bs.exact;
    res.converged = bs.converged;
    res.maximizer = bs.right;
    return res;
  }
  // Custom codomain without dual structure: sample the domain ball and
  // evaluate directly; basis directions first.
  Rng rng(opt.seed);
  for (int i = 0; i < domain.dim(); ++i) {
    Vec e = Vec::Unit(domain.dim(), i);
    e /= domain.eval(e);
    const double val = codomain.eval(t * e);
    if (val > res.value) {
      res.value = val;
      res.maximizer = e;
    }
  }
  for (int s = 0; s < opt.samples; ++s) {
    Vec v = domain.sample_sphere(rng);
    const double val = codomain.eval(t * v);
    if (val > res.value) {
      res.value = val;
      res.maximizer = v;
    }
  }
  res.converged = false;
  res.upper = std::numeric_limits<double>::infinity();
  return res;
}

}  // namespace qstar
