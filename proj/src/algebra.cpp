#include "qstar/algebra.hpp"

namespace qstar {

StarAlgebraModel::StarAlgebraModel(std::vector<Mat> structure, Mat involution,
                                   std::optional<Vec> unit)
    : dim_(static_cast<int>(structure.size())),
      structure_(std::move(structure)),
      involution_(std::move(involution)),
      unit_(std::move(unit)) {
  for (const Mat& c : structure_)
    if (c.rows() != dim_ || c.cols() != dim_)
      throw DimensionError("StarAlgebraModel: structure constants must be dim x dim x dim");
  if (involution_.rows() != dim_ || involution_.cols() != dim_)
    throw DimensionError("StarAlgebraModel: involution must be dim x dim");
  if (unit_ && unit_->size() != dim_) throw DimensionError("StarAlgebraModel: bad unit vector");
}

Vec StarAlgebraModel::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionError("multiply: dimension mismatch");
  Vec out(dim_);
  for (int k = 0; k < dim_; ++k) out(k) = (x.transpose() * structure_[k] * y)(0);
  return out;
}

Mat StarAlgebraModel::left_mult(const Vec& x) const {
  Mat l(dim_, dim_);
  for (int k = 0; k < dim_; ++k) l.row(k) = x.transpose() * structure_[k];
  return l;
}

Mat StarAlgebraModel::right_mult(const Vec& x) const {
  Mat r(dim_, dim_);
  for (int k = 0; k < dim_; ++k) r.row(k) = (structure_[k] * x).transpose();
  return r;
}

Report StarAlgebraModel::validate(double tol) const {
  Report rep;
  rep.title = "star-algebra";
  const int n = dim_;

  double assoc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec eij = multiply(Vec::Unit(n, i), Vec::Unit(n, j));
      for (int k = 0; k < n; ++k) {
        Vec lhs = multiply(eij, Vec::Unit(n, k));
        Vec rhs = multiply(Vec::Unit(n, i), multiply(Vec::Unit(n, j), Vec::Unit(n, k)));
        assoc = std::max(assoc, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
  rep.add("associativity", assoc <= tol, assoc);

  double invol = 0.0;
  for (int i = 0; i < n; ++i) {
    Vec twice = star(star(Vec::Unit(n, i)));
    invol = std::max(invol, (twice - Vec::Unit(n, i)).cwiseAbs().maxCoeff());
  }
  rep.add("involution is involutive", invol <= tol, invol);

  double antihom = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec lhs = star(multiply(Vec::Unit(n, i), Vec::Unit(n, j)));
      Vec rhs = multiply(star(Vec::Unit(n, j)), star(Vec::Unit(n, i)));
      antihom = std::max(antihom, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  rep.add("(xy)* = y*x*", antihom <= tol, antihom);

  if (unit_) {
    double ulaw = 0.0;
    for (int i = 0; i < n; ++i) {
      Vec e = Vec::Unit(n, i);
      ulaw = std::max(ulaw, (multiply(*unit_, e) - e).cwiseAbs().maxCoeff());
      ulaw = std::max(ulaw, (multiply(e, *unit_) - e).cwiseAbs().maxCoeff());
    }
    rep.add("unit laws", ulaw <= tol, ulaw);
  }
  return rep;
}

Vec multiply(const StarAlgebraModel& alg, const Vec& x, const Vec& y) { return alg.multiply(x, y); }

Vec module_action(const QuasiPair& pair, Side side, const Vec& x, const Vec& a) {
  return side == Side::Left ? pair.algebra.multiply(x, a) : pair.algebra.multiply(a, x);
}

OpNormResult operator_norm(const OperatorMatrix& t, const AscentOptions& opt) {
  return operator_norm_impl(t.matrix, t.domain_norm, t.codomain_norm, opt);
}

OpNormResult a0_norm(const QuasiPair& pair, const Vec& x, const AscentOptions& opt) {
  OpNormResult l = operator_norm_impl(pair.algebra.left_mult(x), pair.normA, pair.normA, opt);
  OpNormResult r = operator_norm_impl(pair.algebra.right_mult(x), pair.normA, pair.normA, opt);
  return l.value >= r.value ? l : r;
}

double eval_norm(const NormSpec& spec, const Vec& v) { return spec.eval(v); }
NormSpec dual_norm(const NormSpec& spec) { return spec.dual(); }

QuasiPair unitize(const QuasiPair& pair) {
  if (pair.algebra.unital()) throw std::invalid_argument("unitize: pair already has a unit");
  const int n = pair.dim();
  std::vector<Mat> c(n + 1, Mat::Zero(n + 1, n + 1));
  for (int k = 0; k < n; ++k) {
    c[k].topLeftCorner(n, n) = pair.algebra.structure(k);
    c[k](n, k) = 1.0;  // e . e_k
    c[k](k, n) = 1.0;  // e_k . e
  }
  c[n](n, n) = 1.0;  // e . e
  Mat j = Mat::Zero(n + 1, n + 1);
  j.topLeftCorner(n, n) = pair.algebra.involution();
  j(n, n) = 1.0;
  Vec e = Vec::Unit(n + 1, n);
  return QuasiPair{StarAlgebraModel(std::move(c), std::move(j), e),
                   NormSpec::unitize(pair.normA), pair.label + "+unit"};
}

bool normalize_unit_norm(QuasiPair& pair) {
  if (!pair.algebra.unital()) return false;
  const double ne = pair.normA.eval(*pair.algebra.unit());
  if (std::abs(ne - 1.0) <= 1e-12) return false;
  // |a|' = |a| / |e|
  switch (pair.normA.kind()) {
    case NormSpec::Kind::P:
      pair.normA = NormSpec::p_norm(pair.normA.dim(), pair.normA.p(), pair.normA.scale() / ne);
      break;
    case NormSpec::Kind::WeightedP:
      pair.normA = NormSpec::weighted_p(pair.normA.p(), pair.normA.weights(),
                                        pair.normA.scale() / ne);
      break;
    case NormSpec::Kind::Gram:
      pair.normA = NormSpec::gram(pair.normA.gram_matrix(), pair.normA.scale() / ne);
      break;
    default:
      throw UnsupportedError("normalize_unit_norm: cannot rescale this norm kind");
  }
  return true;
}

Report validate_quasi_pair(const QuasiPair& pair, int samples, double tol, std::uint64_t seed) {
  Report rep;
  rep.title = pair.label.empty() ? "quasi-pair" : pair.label;
  rep.merge(pair.algebra.validate(tol));
  Rng rng(seed);
  const int n = pair.dim();

  double bilin = 0.0;
  for (int s = 0; s < samples; ++s) {
    Vec x = rng.cvector(n), a = rng.cvector(n), b = rng.cvector(n);
    const Cplx al = rng.cgauss(), be = rng.cgauss();
    Vec lhs = module_action(pair, Side::Left, x, al * a + be * b);
    Vec rhs = al * module_action(pair, Side::Left, x, a) + be * module_action(pair, Side::Left, x, b);
    bilin = std::max(bilin, (lhs - rhs).cwiseAbs().maxCoeff() /
                               std::max(1.0, rhs.cwiseAbs().maxCoeff()));
  }
  rep.add("actions bilinear", bilin <= tol, bilin);

  double assoc_mod = 0.0;
  for (int s = 0; s < samples; ++s) {
    Vec x = rng.cvector(n), y = rng.cvector(n), a = rng.cvector(n);
    // (xa)y = x(ay)
    Vec lhs = pair.algebra.multiply(pair.algebra.multiply(x, a), y);
    Vec rhs = pair.algebra.multiply(x, pair.algebra.multiply(a, y));
    assoc_mod = std::max(assoc_mod, (lhs - rhs).cwiseAbs().maxCoeff() /
                                       std::max(1.0, rhs.cwiseAbs().maxCoeff()));
    // a(xy) = (ax)y
    Vec lhs2 = pair.algebra.multiply(a, pair.algebra.multiply(x, y));
    Vec rhs2 = pair.algebra.multiply(pair.algebra.multiply(a, x), y);
    assoc_mod = std::max(assoc_mod, (lhs2 - rhs2).cwiseAbs().maxCoeff() /
                                       std::max(1.0, rhs2.cwiseAbs().maxCoeff()));
  }
  rep.add("module associativity", assoc_mod <= tol, assoc_mod);

  double invol_law = 0.0;
  for (int s = 0; s < samples; ++s) {
    Vec x = rng.cvector(n), a = rng.cvector(n);
    Vec lhs = pair.algebra.star(pair.algebra.multiply(a, x));
    Vec rhs = pair.algebra.multiply(pair.algebra.star(x), pair.algebra.star(a));
    invol_law = std::max(invol_law, (lhs - rhs).cwiseAbs().maxCoeff() /
                                       std::max(1.0, rhs.cwiseAbs().maxCoeff()));
    Vec lhs2 = pair.algebra.star(pair.algebra.multiply(x, a));
    Vec rhs2 = pair.algebra.multiply(pair.algebra.star(a), pair.algebra.star(x));
    invol_law = std::max(invol_law, (lhs2 - rhs2).cwiseAbs().maxCoeff() /
                                       std::max(1.0, rhs2.cwiseAbs().maxCoeff()));
  }
  rep.add("(ax)* = x*a*", invol_law <= tol, invol_law);

  double iso = 0.0;
  for (int s = 0; s < samples + n; ++s) {
    Vec a = s < n ? Vec(Vec::Unit(n, s)) : rng.cvector(n);
    const double na = pair.normA.eval(a);
    const double ns = pair.normA.eval(pair.algebra.star(a));
    iso = std::max(iso, std::abs(na - ns) / std::max(1.0, na));
  }
  rep.add("involution isometric", iso <= 1e-9, iso);

  double worst_action = 0.0;
  bool bounded = true;
  AscentOptions opt;
  opt.seed = seed;
  opt.max_restarts = 8;
  for (int i = 0; i < n; ++i) {
    OpNormResult a0 = a0_norm(pair, Vec::Unit(n, i), opt);
    if (!std::isfinite(a0.value)) bounded = false;
    worst_action = std::max(worst_action, a0.value);
  }
  rep.add("module actions bounded", bounded, worst_action,
          "largest basis multiplier norm " + std::to_string(worst_action));

  if (pair.algebra.unital()) {
    const double ne = pair.normA.eval(*pair.algebra.unit());
    auto& entry = rep.add("unit norm", true, std::abs(ne - 1.0));
    if (std::abs(ne - 1.0) > 1e-9) {
      entry.warning = true;
      entry.detail = "|e| = " + std::to_string(ne) + ", expected 1 (rescale the norm)";
    }
  }
  return rep;
}

}  // namespace qstar
