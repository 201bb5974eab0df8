#pragma once

#include "qstar/norms.hpp"

namespace qstar {

struct AscentOptions {
  int max_restarts = 32;
  int max_iters = 300;
  int samples = 256;  // pure-sampling budget for custom norms
  double stall_tol = 1e-12;
  std::uint64_t seed = kDefaultSeed;
};

/// Certified result of sup |u^T M v| over two unit balls. `value` is always a
/// valid lower bound attained by the certificate pair; `upper` is a valid
/// upper bound (equal to value when `exact`).
struct BilinearSupResult {
  double value = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  bool exact = false;
  bool converged = false;
  int restarts = 0;
  Vec left, right;

  double gap() const { return upper - value; }
};

/// sup { |u^T M v| : |u|_left <= 1, |v|_right <= 1 }.
///
/// Exact when both sides are inner-product norms (largest singular value of a
/// Gram-transformed matrix) or when one side's ball has finitely many extreme
/// points modulo phase (enumeration with an exact support step on the other
/// side). Otherwise monotone alternating ascent with multistart; the basis
/// directions and low-dimensional sign patterns are always among the starts.
BilinearSupResult bilinear_sup(const Mat& m, const NormSpec& left, const NormSpec& right,
                               const AscentOptions& opt = {});

struct OpNormResult {
  double value = 0.0;  // certified lower bound, the reported operator norm
  double upper = std::numeric_limits<double>::infinity();
  bool exact = false;
  bool converged = false;
  Vec maximizer;  // domain vector attaining `value`
};

/// Operator norm sup |T v|_codomain over the domain unit ball.
OpNormResult operator_norm_impl(const Mat& t, const NormSpec& domain, const NormSpec& codomain,
                                const AscentOptions& opt = {});

}  // namespace qstar
