#include "orlicz/energy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace orlicz {

namespace {

void require_match(const Grid& g, const GridFunction& v, const char* who) {
  if (!g.matches(v))
    throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

// |d|^{m-2} d with the m < 2 degeneracy resolved to 0 at d = 0.
double flux(double d, double m) {
  if (d == 0.0) return 0.0;
  return std::copysign(std::pow(std::abs(d), m - 1.0), d);
}

double flux_derivative(double d, double m) {
  const double a = std::abs(d);
  if (a == 0.0) return m > 2.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return (m - 1.0) * std::pow(a, m - 2.0);
}

}  // namespace

Energy Energy::zero(Grid grid) {
  Energy e;
  e.kind_ = EnergyKind::Zero;
  e.grid_ = std::move(grid);
  return e;
}

Energy Energy::mx_laplacian(Grid grid, Eigen::ArrayXd m_nodes) {
  if (!grid.uniform)
    throw std::invalid_argument("Energy: m(x)-Laplacian needs a uniform grid");
  if (m_nodes.size() != grid.n)
    throw std::invalid_argument("Energy: exponent table size != grid size");
  if ((m_nodes <= 1.0).any() || !m_nodes.isFinite().all())
    throw std::invalid_argument("Energy: require 1 < m(x) < inf");
  Energy e;
  e.kind_ = EnergyKind::MxLaplacian;
  const int n = grid.n;
  e.m_edges_.resize(n + 1);
  e.m_edges_[0] = m_nodes[0];
  e.m_edges_[n] = m_nodes[n - 1];
  for (int i = 1; i < n; ++i)
    e.m_edges_[i] = 0.5 * (m_nodes[i - 1] + m_nodes[i]);
  e.grid_ = std::move(grid);
  return e;
}

Energy Energy::mx_laplacian(Grid grid, double m) {
  const int n = grid.n;
  return mx_laplacian(std::move(grid), Eigen::ArrayXd::Constant(n, m));
}

Energy Energy::fractional(Grid grid, double s, double c_s) {
  if (!grid.uniform)
    throw std::invalid_argument("Energy: fractional needs a uniform grid");
  if (!(s > 0.0 && s < 1.0) || !(c_s > 0.0))
    throw std::invalid_argument("Energy: require 0 < s < 1, c_s > 0");
  Energy e;
  e.kind_ = EnergyKind::FractionalLaplacian;
  e.s_ = s;
  e.c_s_ = c_s;
  const int n = grid.n;
  const double h = grid.h;
  e.kernel_ = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        e.kernel_(i, j) =
            h * h / std::pow(std::abs(grid.nodes[i] - grid.nodes[j]), 1.0 + 2.0 * s);
  e.exterior_.resize(n);
  for (int i = 0; i < n; ++i) {
    const double left = std::pow(grid.nodes[i] - grid.a, -2.0 * s);
    const double right = std::pow(grid.b - grid.nodes[i], -2.0 * s);
    e.exterior_[i] = h * (left + right) / (2.0 * s);
  }
  e.grid_ = std::move(grid);
  return e;
}

double Energy::value(const GridFunction& w) const {
  require_match(grid_, w, "Energy::value");
  switch (kind_) {
    case EnergyKind::Zero:
      return 0.0;
    case EnergyKind::MxLaplacian: {
      const int n = grid_.n;
      const double h = grid_.h;
      double acc = 0.0;
      for (int e = 0; e <= n; ++e) {
        const double wl = e == 0 ? 0.0 : w[e - 1];
        const double wr = e == n ? 0.0 : w[e];
        const double d = (wr - wl) / h;
        if (d != 0.0)
          acc += h / m_edges_[e] * std::pow(std::abs(d), m_edges_[e]);
      }
      return acc;
    }
    case EnergyKind::FractionalLaplacian: {
      double acc = 0.0;
      const int n = grid_.n;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double d = w[i] - w[j];
          acc += 0.25 * c_s_ * kernel_(i, j) * d * d;
        }
        acc += 0.5 * c_s_ * exterior_[i] * w[i] * w[i];
      }
      return acc;
    }
  }
  return 0.0;
}

GridFunction Energy::grad(const GridFunction& w) const {
  require_match(grid_, w, "Energy::grad");
  const int n = grid_.n;
  GridFunction g = GridFunction::Zero(n);
  switch (kind_) {
    case EnergyKind::Zero:
      break;
    case EnergyKind::MxLaplacian: {
      const double h = grid_.h;
      for (int e = 0; e <= n; ++e) {
        const double wl = e == 0 ? 0.0 : w[e - 1];
        const double wr = e == n ? 0.0 : w[e];
        const double f = flux((wr - wl) / h, m_edges_[e]);
        if (e > 0) g[e - 1] -= f;
        if (e < n) g[e] += f;
      }
      break;
    }
    case EnergyKind::FractionalLaplacian: {
      for (int i = 0; i < n; ++i) {
        double acc = c_s_ * exterior_[i] * w[i];
        for (int j = 0; j < n; ++j)
          acc += c_s_ * kernel_(i, j) * (w[i] - w[j]);
        g[i] = acc;
      }
      break;
    }
  }
  return g;
}

GridFunction Energy::subgradient(const GridFunction& w) const {
  GridFunction g = grad(w);
  g.array() /= grid_.weights;
  return g;
}

void Energy::add_hessian(const GridFunction& w, Eigen::VectorXd& diag,
                         Eigen::VectorXd& off) const {
  const int n = grid_.n;
  switch (kind_) {
    case EnergyKind::Zero:
      break;
    case EnergyKind::MxLaplacian: {
      const double h = grid_.h;
      for (int e = 0; e <= n; ++e) {
        const double wl = e == 0 ? 0.0 : w[e - 1];
        const double wr = e == n ? 0.0 : w[e];
        double fd = flux_derivative((wr - wl) / h, m_edges_[e]) / h;
        if (!std::isfinite(fd)) fd = 0.0;  // caller's curvature floor applies
        if (e > 0) diag[e - 1] += fd;
        if (e < n) diag[e] += fd;
        if (e > 0 && e < n) off[e - 1] -= fd;
      }
      break;
    }
    case EnergyKind::FractionalLaplacian: {
      for (int i = 0; i < n; ++i) {
        diag[i] += c_s_ * (exterior_[i] + kernel_.row(i).sum());
        if (i + 1 < n) off[i] -= c_s_ * kernel_(i, i + 1);
      }
      break;
    }
  }
}

}  // namespace orlicz
