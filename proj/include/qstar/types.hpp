#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace qstar {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline constexpr double kAlgebraTol = 1e-12;  // residuals of exact algebraic identities
inline constexpr double kOptTol = 1e-6;       // optimizer agreement
inline constexpr double kOracleTol = 1e-3;    // cross-checks against grid oracles
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Seeded generator used everywhere randomness appears; identical seeds give
/// identical runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : gen_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  double gauss() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
  Cplx cgauss() { return Cplx(gauss(), gauss()); }
  int index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen_); }
  Cplx phase() {
    const double t = uniform(0.0, 2.0 * M_PI);
    return Cplx(std::cos(t), std::sin(t));
  }

  Vec cvector(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = cgauss();
    return v;
  }
  Vec rvector(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = Cplx(gauss(), 0.0);
    return v;
  }
  Mat cmatrix(int rows, int cols) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = cgauss();
    return m;
  }
  /// Random Hermitian PSD matrix A^H A, scaled to unit spectral-ish size.
  Mat psd(int n) {
    Mat a = cmatrix(n, n);
    Mat p = a.adjoint() * a;
    return p / std::max(1.0, p.norm());
  }

  std::uint64_t raw() { return gen_(); }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline Cplx csign(Cplx z) {
  const double a = std::abs(z);
  return a > 0.0 ? z / a : Cplx(1.0, 0.0);
}

/// Kronecker product in the row-major pair ordering (i,j) -> i*cols(B)+j used
/// for every tensor-coordinate flattening in this library.
inline Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

inline Vec kron(const Vec& a, const Vec& b) {
  Vec k(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) k(i * b.size() + j) = a(i) * b(j);
  return k;
}

/// Row-major flattening of an n x m coefficient matrix to length n*m.
inline Vec flatten(const Mat& m) {
  Vec v(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

inline Mat unflatten(const Vec& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols)
    throw DimensionError("unflatten: size mismatch");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  return m;
}

}  // namespace qstar
