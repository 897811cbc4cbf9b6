#include "orlicz/phi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_exponent_bounds(const Eigen::ArrayXd& p, const char* name) {
  if (p.size() < 1) throw std::invalid_argument("PhiFunction: empty table");
  if ((p <= 1.0).any() || !p.isFinite().all())
    throw std::invalid_argument(std::string("PhiFunction: exponent table '") +
                                name + "' must satisfy 1 < p < inf");
}

// Monotone cubic Hermite interpolation (Fritsch-Carlson slopes) on a
// strictly increasing abscissa.
struct Pchip {
  std::vector<double> x, y, d;

  void build(std::vector<double> xs, std::vector<double> ys) {
    x = std::move(xs);
    y = std::move(ys);
    const size_t n = x.size();
    d.assign(n, 0.0);
    if (n < 2) return;
    std::vector<double> delta(n - 1);
    for (size_t i = 0; i + 1 < n; ++i)
      delta[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    d[0] = delta[0];
    d[n - 1] = delta[n - 2];
    for (size_t i = 1; i + 1 < n; ++i) {
      if (delta[i - 1] * delta[i] <= 0.0) {
        d[i] = 0.0;
      } else {
        const double w1 = 2.0 * (x[i + 1] - x[i]) + (x[i] - x[i - 1]);
        const double w2 = (x[i + 1] - x[i]) + 2.0 * (x[i] - x[i - 1]);
        d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
      }
    }
  }

  bool covers(double t) const {
    return !x.empty() && t >= x.front() && t <= x.back();
  }

  double eval(double t) const {
    const auto it = std::upper_bound(x.begin(), x.end(), t);
    size_t i = (it == x.begin()) ? 0 : (it - x.begin() - 1);
    if (i + 1 >= x.size()) i = x.size() - 2;
    const double hseg = x[i + 1] - x[i];
    const double s = (t - x[i]) / hseg;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
    const double h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s);
    const double h11 = s * s * (s - 1);
    return h00 * y[i] + h10 * hseg * d[i] + h01 * y[i + 1] +
           h11 * hseg * d[i + 1];
  }
};

}  // namespace

struct PhiFunction::Impl {
  PhiKind kind_;
  int n_ = 0;
  std::string label_;

  virtual ~Impl() = default;
  virtual double phi(int i, double r) const = 0;
  virtual double alpha(int i, double r) const = 0;

  virtual double curvature(int i, double r) const {
    // Central difference of alpha; adequate for line-search Newton with a
    // curvature floor.
    const double hstep = 1e-6 * (1.0 + std::abs(r));
    return (alpha(i, r + hstep) - alpha(i, r - hstep)) / (2.0 * hstep);
  }

  virtual bool homogeneous() const = 0;
};

namespace {

struct PowerImpl final : PhiFunction::Impl {
  Eigen::ArrayXd p;

  double phi(int i, double r) const override {
    const double a = std::abs(r);
    return a == 0.0 ? 0.0 : std::pow(a, p[i]) / p[i];
  }
  double alpha(int i, double r) const override {
    if (r == 0.0) return 0.0;
    const double a = std::abs(r);
    return std::copysign(std::pow(a, p[i] - 1.0), r);
  }
  double curvature(int i, double r) const override {
    const double a = std::abs(r);
    if (a == 0.0) {
      if (p[i] > 2.0) return 0.0;
      return p[i] == 2.0 ? 1.0 : kInf;
    }
    return (p[i] - 1.0) * std::pow(a, p[i] - 2.0);
  }
  bool homogeneous() const override {
    return (p == p[0]).all();
  }
};

struct PowerLogImpl final : PhiFunction::Impl {
  Eigen::ArrayXd p, q;

  double phi(int i, double r) const override {
    const double a = std::abs(r);
    if (a == 0.0) return 0.0;
    return std::pow(a, p[i]) / p[i] * std::pow(std::log1p(a), q[i]);
  }
  double alpha(int i, double r) const override {
    if (r == 0.0) return 0.0;
    const double a = std::abs(r);
    const double L = std::log1p(a);
    const double v = std::pow(a, p[i] - 1.0) * std::pow(L, q[i]) +
                     std::pow(a, p[i]) / p[i] * q[i] *
                         std::pow(L, q[i] - 1.0) / (1.0 + a);
    return std::copysign(v, r);
  }
  bool homogeneous() const override {
    return (p == p[0]).all() && (q == q[0]).all();
  }
};

struct TwoPowerImpl final : PhiFunction::Impl {
  Eigen::ArrayXd p, q, a, b;

  double phi(int i, double r) const override {
    const double x = std::abs(r);
    if (x == 0.0) return 0.0;
    return a[i] / p[i] * std::pow(x, p[i]) + b[i] / q[i] * std::pow(x, q[i]);
  }
  double alpha(int i, double r) const override {
    if (r == 0.0) return 0.0;
    const double x = std::abs(r);
    const double v =
        a[i] * std::pow(x, p[i] - 1.0) + b[i] * std::pow(x, q[i] - 1.0);
    return std::copysign(v, r);
  }
  double curvature(int i, double r) const override {
    const double x = std::abs(r);
    if (x == 0.0) {
      auto at0 = [](double e, double c) {
        if (c == 0.0 || e > 2.0) return 0.0;
        return e == 2.0 ? c : kInf;
      };
      const double cp = at0(p[i], a[i]), cq = at0(q[i], b[i]);
      return cp + cq;  // inf propagates
    }
    return a[i] * (p[i] - 1.0) * std::pow(x, p[i] - 2.0) +
           b[i] * (q[i] - 1.0) * std::pow(x, q[i] - 2.0);
  }
  bool homogeneous() const override {
    return (p == p[0]).all() && (q == q[0]).all() && (a == a[0]).all() &&
           (b == b[0]).all();
  }
};

struct CustomImpl final : PhiFunction::Impl {
  std::function<double(double)> f, df;

  double phi(int, double r) const override { return r == 0.0 ? 0.0 : f(std::abs(r)); }
  double alpha(int, double r) const override {
    if (r == 0.0) return 0.0;
    return std::copysign(df(std::abs(r)), r);
  }
  bool homogeneous() const override { return true; }
};

// r*(s) = alpha^{-1}(s) by monotone bisection; returns +inf when the
// bracket doubling overflows (phi* infinite at the working precision).
double invert_alpha(const PhiFunction::Impl& impl, int i, double s) {
  if (s <= 0.0) return 0.0;
  double hi = 1.0;
  int guard = 0;
  while (impl.alpha(i, hi) < s) {
    hi *= 2.0;
    if (!std::isfinite(impl.alpha(i, hi)) || ++guard > 1100) return kInf;
  }
  double lo = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (impl.alpha(i, mid) < s)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-15 * hi) break;
  }
  return 0.5 * (lo + hi);
}

double direct_conjugate(const PhiFunction::Impl& impl, int i, double s) {
  const double a = std::abs(s);
  if (a == 0.0) return 0.0;
  const double r = invert_alpha(impl, i, a);
  if (!std::isfinite(r)) return kInf;
  const double v = a * r - impl.phi(i, r);
  return std::max(v, 0.0);
}

// Numerical conjugate: phi*(x,s) = sup_r (rs - phi(x,r)), evaluated via the
// inverse of the strictly increasing derivative and memoized per node on a
// log-spaced s-grid with monotone cubic interpolation in log-log variables.
// Outside the tabulated range (or where the table hit overflow) evaluation
// falls back to the direct computation, which stays pure.
struct NumConjImpl final : PhiFunction::Impl {
  std::shared_ptr<const PhiFunction::Impl> primal;
  std::vector<Pchip> tables;  // one per node, or a single shared one
  bool shared_table = false;

  static constexpr int kPointsPerDecade = 32;
  static constexpr double kSMin = 1e-10;
  static constexpr double kSMax = 1e10;

  void build_tables() {
    shared_table = primal->homogeneous();
    const int count = shared_table ? 1 : n_;
    tables.resize(count);
    const int decades = static_cast<int>(std::log10(kSMax / kSMin));
    const int pts = decades * kPointsPerDecade + 1;
    for (int node = 0; node < count; ++node) {
      std::vector<double> ts, vs;
      ts.reserve(pts);
      vs.reserve(pts);
      for (int j = 0; j < pts; ++j) {
        const double s =
            kSMin * std::pow(kSMax / kSMin, double(j) / (pts - 1));
        const double v = direct_conjugate(*primal, node, s);
        if (!std::isfinite(v) || v <= 0.0) break;  // truncate at overflow
        ts.push_back(std::log(s));
        vs.push_back(std::log(v));
      }
      if (ts.size() >= 4) tables[node].build(std::move(ts), std::move(vs));
    }
  }

  const Pchip& table(int i) const { return tables[shared_table ? 0 : i]; }

  double phi(int i, double s) const override {
    const double a = std::abs(s);
    if (a == 0.0) return 0.0;
    const double t = std::log(a);
    const Pchip& tb = table(i);
    if (tb.covers(t)) return std::exp(tb.eval(t));
    return direct_conjugate(*primal, i, a);
  }
  double alpha(int i, double s) const override {
    if (s == 0.0) return 0.0;
    // d phi*/ds is the inverse of the primal derivative.
    return std::copysign(invert_alpha(*primal, i, std::abs(s)), s);
  }
  bool homogeneous() const override { return primal->homogeneous(); }
};

}  // namespace

PhiFunction::PhiFunction(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

PhiFunction PhiFunction::power(Eigen::ArrayXd p) {
  check_exponent_bounds(p, "p");
  auto impl = std::make_shared<PowerImpl>();
  impl->kind_ = PhiKind::Power;
  impl->n_ = static_cast<int>(p.size());
  impl->label_ = "power";
  impl->p = std::move(p);
  return PhiFunction(impl);
}

PhiFunction PhiFunction::power(double p, int n_nodes) {
  return power(Eigen::ArrayXd::Constant(n_nodes, p));
}

PhiFunction PhiFunction::power_log(Eigen::ArrayXd p, Eigen::ArrayXd q) {
  check_exponent_bounds(p, "p");
  if (q.size() != p.size() || (q < 1.0).any() || !q.isFinite().all())
    throw std::invalid_argument("PhiFunction: power_log requires q >= 1");
  auto impl = std::make_shared<PowerLogImpl>();
  impl->kind_ = PhiKind::PowerLog;
  impl->n_ = static_cast<int>(p.size());
  impl->label_ = "power_log";
  impl->p = std::move(p);
  impl->q = std::move(q);
  return PhiFunction(impl);
}

PhiFunction PhiFunction::power_log(double p, double q, int n_nodes) {
  return power_log(Eigen::ArrayXd::Constant(n_nodes, p),
                   Eigen::ArrayXd::Constant(n_nodes, q));
}

PhiFunction PhiFunction::two_power(Eigen::ArrayXd p, Eigen::ArrayXd q,
                                   Eigen::ArrayXd a, Eigen::ArrayXd b) {
  check_exponent_bounds(p, "p");
  check_exponent_bounds(q, "q");
  if (a.size() != p.size() || b.size() != p.size() || (a < 0.0).any() ||
      (b < 0.0).any() || ((a + b) <= 0.0).any())
    throw std::invalid_argument(
        "PhiFunction: two_power weights must be nonnegative with a+b > 0");
  auto impl = std::make_shared<TwoPowerImpl>();
  impl->kind_ = PhiKind::TwoPower;
  impl->n_ = static_cast<int>(p.size());
  impl->label_ = "two_power";
  impl->p = std::move(p);
  impl->q = std::move(q);
  impl->a = std::move(a);
  impl->b = std::move(b);
  return PhiFunction(impl);
}

PhiFunction PhiFunction::two_power(double p, double q, double a, double b,
                                   int n_nodes) {
  auto c = [&](double v) { return Eigen::ArrayXd::Constant(n_nodes, v); };
  return two_power(c(p), c(q), c(a), c(b));
}

PhiFunction PhiFunction::custom(std::function<double(double)> phi,
                                std::function<double(double)> alpha,
                                int n_nodes, std::string label) {
  if (!phi || !alpha || n_nodes < 1)
    throw std::invalid_argument("PhiFunction: custom requires phi, alpha, n");
  auto impl = std::make_shared<CustomImpl>();
  impl->kind_ = PhiKind::Custom;
  impl->n_ = n_nodes;
  impl->label_ = std::move(label);
  impl->f = std::move(phi);
  impl->df = std::move(alpha);
  return PhiFunction(impl);
}

double PhiFunction::phi(int node, double r) const {
  if (!std::isfinite(r)) throw std::invalid_argument("phi: non-finite r");
  return impl_->phi(node, r);
}

double PhiFunction::alpha(int node, double r) const {
  if (!std::isfinite(r)) throw std::invalid_argument("alpha: non-finite r");
  return impl_->alpha(node, r);
}

double PhiFunction::curvature(int node, double r) const {
  return impl_->curvature(node, r);
}

PhiFunction PhiFunction::conjugate() const {
  if (impl_->kind_ == PhiKind::Power) {
    const auto& pw = static_cast<const PowerImpl&>(*impl_);
    // (|r|^p/p)* = |s|^{p'}/p' with p' = p/(p-1).
    return power(pw.p / (pw.p - 1.0));
  }
  auto impl = std::make_shared<NumConjImpl>();
  impl->kind_ = PhiKind::NumericalConjugate;
  impl->n_ = impl_->n_;
  impl->label_ = impl_->label_ + "*";
  impl->primal = impl_;
  impl->build_tables();
  return PhiFunction(impl);
}

PhiKind PhiFunction::kind() const { return impl_->kind_; }

ConjugateMode PhiFunction::conjugate_mode() const {
  return impl_->kind_ == PhiKind::Power ? ConjugateMode::ClosedForm
                                        : ConjugateMode::Numerical;
}

int PhiFunction::nodes() const { return impl_->n_; }

const std::string& PhiFunction::label() const { return impl_->label_; }

bool PhiFunction::spatially_homogeneous() const {
  return impl_->homogeneous();
}

Eigen::ArrayXd log_space(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2)
    throw std::invalid_argument("log_space: require 0 < lo < hi, count >= 2");
  Eigen::ArrayXd out(count);
  for (int i = 0; i < count; ++i)
    out[i] = lo * std::pow(hi / lo, double(i) / (count - 1));
  return out;
}

double delta2_constant(const PhiFunction& phi, double r_max, int samples) {
  if (!(r_max > 0.0) || samples < 2)
    throw std::invalid_argument("delta2_constant: r_max > 0, samples >= 2");
  const Eigen::ArrayXd rs = log_space(1e-8, r_max, samples);
  double sup = 0.0;
  for (int i = 0; i < phi.nodes(); ++i) {
    for (int j = 0; j < rs.size(); ++j) {
      const double lo = phi.phi(i, rs[j]);
      if (lo <= 0.0) continue;
      const double hi = phi.phi(i, 2.0 * rs[j]);
      if (!std::isfinite(hi)) return kInf;
      sup = std::max(sup, hi / lo);
    }
  }
  return sup;
}

double k0_lower_bound(double K) {
  if (!(K > 2.0))
    throw std::domain_error("k0_lower_bound: requires K > 2");
  return 2.0 + 1.0 / (K - 2.0);
}

bool delta2_diverges(const PhiFunction& phi, double r_max_final, int samples) {
  double prev = 0.0;
  for (double r_max = 1.0; r_max <= r_max_final * 1.0001; r_max *= 10.0) {
    const double k = delta2_constant(phi, r_max, samples);
    if (!std::isfinite(k)) return true;
    if (prev > 0.0 && k > 1.10 * prev) return true;
    prev = k;
  }
  return false;
}

ValidationReport validate_assumption_alpha(const PhiFunction& phi,
                                           const Eigen::ArrayXd& r_grid,
                                           double tol) {
  ValidationReport rep;
  const int n = phi.nodes();
  const int probe = std::min(n, 8);

  rep.even = true;
  rep.alpha_zero_at_origin = true;
  rep.alpha_strictly_increasing = true;
  rep.young_equality = true;
  rep.nfun_limit_zero = true;
  rep.nfun_limit_inf = true;

  PhiFunction conj = phi.conjugate();

  for (int i = 0; i < probe; ++i) {
    const int node = i * std::max(1, n / probe);
    double prev_alpha = 0.0;
    double prev_ratio = -1.0;
    bool first = true;
    if (phi.alpha(node, 0.0) != 0.0) rep.alpha_zero_at_origin = false;
    for (int j = 0; j < r_grid.size(); ++j) {
      const double r = r_grid[j];
      const double pv = phi.phi(node, r);
      if (std::abs(phi.phi(node, -r) - pv) > tol * (1.0 + pv))
        rep.even = false;
      const double av = phi.alpha(node, r);
      if (!first && av <= prev_alpha) rep.alpha_strictly_increasing = false;
      prev_alpha = av;
      // N-function trend: phi(r)/r must increase across the sample.
      const double ratio = pv / r;
      if (!first && ratio < prev_ratio * (1.0 - 1e-10))
        rep.nfun_limit_zero = rep.nfun_limit_inf = false;
      prev_ratio = ratio;
      first = false;
      // Equality case of Young at s = alpha(r).
      const double lhs = r * av;
      const double rhs = pv + conj.phi(node, av);
      if (std::isfinite(rhs) &&
          std::abs(lhs - rhs) > tol * (1.0 + std::abs(lhs)))
        rep.young_equality = false;
    }
    // Endpoint magnitudes for the N-function limits.
    const double r_lo = r_grid[0], r_hi = r_grid[r_grid.size() - 1];
    if (phi.phi(node, r_lo) / r_lo > 1e-2) rep.nfun_limit_zero = false;
    if (phi.phi(node, r_hi) / r_hi < 1e2) rep.nfun_limit_inf = false;
  }

  rep.K_phi = delta2_constant(phi, 1e6, 128);
  rep.K_conjugate = delta2_constant(conj, 1e6, 128);
  rep.delta2_phi = std::isfinite(rep.K_phi) && !delta2_diverges(phi);
  rep.delta2_conjugate =
      std::isfinite(rep.K_conjugate) && !delta2_diverges(conj);
  return rep;
}

}  // namespace orlicz
