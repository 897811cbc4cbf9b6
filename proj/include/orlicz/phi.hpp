#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace orlicz {

enum class PhiKind { Power, PowerLog, TwoPower, Custom, NumericalConjugate };
enum class ConjugateMode { ClosedForm, Numerical };

/// A generalized Phi-function phi(x,r): even, strictly convex in r with
/// phi(x,0) = 0, together with its derivative alpha(x,r) = d phi / dr.
/// Spatial dependence enters through per-node parameter tables. Values are
/// immutable after construction; all evaluation is const and thread-safe.
class PhiFunction {
 public:
  struct Impl;

  /// phi(x,r) = |r|^p(x) / p(x)
  static PhiFunction power(Eigen::ArrayXd p);
  static PhiFunction power(double p, int n_nodes);

  /// phi(x,r) = (1/p(x)) |r|^p(x) log^q(x)(1+|r|)
  static PhiFunction power_log(Eigen::ArrayXd p, Eigen::ArrayXd q);
  static PhiFunction power_log(double p, double q, int n_nodes);

  /// phi(x,r) = (a(x)/p(x)) |r|^p(x) + (b(x)/q(x)) |r|^q(x)
  static PhiFunction two_power(Eigen::ArrayXd p, Eigen::ArrayXd q,
                               Eigen::ArrayXd a, Eigen::ArrayXd b);
  static PhiFunction two_power(double p, double q, double a, double b,
                               int n_nodes);

  /// Spatially homogeneous custom phi with user-supplied derivative.
  static PhiFunction custom(std::function<double(double)> phi,
                            std::function<double(double)> alpha, int n_nodes,
                            std::string label = "custom");

  double phi(int node, double r) const;
  double alpha(int node, double r) const;
  /// Second derivative d alpha / dr, by formula where available and by a
  /// central difference of alpha otherwise. Callers clamp it from below.
  double curvature(int node, double r) const;

  /// Legendre-Fenchel conjugate in r: closed form for Power, numerical
  /// (memoized inverse-derivative tables) for everything else.
  PhiFunction conjugate() const;

  PhiKind kind() const;
  ConjugateMode conjugate_mode() const;
  int nodes() const;
  const std::string& label() const;

  /// True when the parameters do not vary across nodes.
  bool spatially_homogeneous() const;

 private:
  explicit PhiFunction(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// Sampled Delta_2 constant: sup over nodes and a log-spaced r-sample of
/// phi(x,2r)/phi(x,r). Returns +inf when phi(x,2r) overflows, which is the
/// detection mechanism for non-Delta_2 growth.
double delta2_constant(const PhiFunction& phi, double r_max, int samples);

/// Super-doubling constant 2 + 1/(K-2) guaranteed by a Delta_2 constant
/// K > 2 of the conjugate.
double k0_lower_bound(double K);

/// Trend test: Delta_2 estimates across growing r_max decades; flags
/// divergence when the estimate grows by more than 10% between consecutive
/// decades or overflows.
bool delta2_diverges(const PhiFunction& phi, double r_max_final = 1e6,
                     int samples = 64);

struct ValidationReport {
  bool even = false;
  bool alpha_zero_at_origin = false;
  bool alpha_strictly_increasing = false;
  bool nfun_limit_zero = false;  // phi(x,r)/r -> 0 as r -> 0+
  bool nfun_limit_inf = false;   // phi(x,r)/r -> inf as r -> inf
  bool delta2_phi = false;
  bool delta2_conjugate = false;
  bool young_equality = false;  // r*alpha(r) = phi(r) + phi*(alpha(r))
  double K_phi = 0.0;
  double K_conjugate = 0.0;

  bool pass() const {
    return even && alpha_zero_at_origin && alpha_strictly_increasing &&
           nfun_limit_zero && nfun_limit_inf && delta2_phi &&
           delta2_conjugate && young_equality;
  }
};

ValidationReport validate_assumption_alpha(const PhiFunction& phi,
                                           const Eigen::ArrayXd& r_grid,
                                           double tol);

/// Log-spaced sample grid spanning [lo, hi], handy for validation sweeps.
Eigen::ArrayXd log_space(double lo, double hi, int count);

}  // namespace orlicz
