#include "hypch/gmres.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hypch {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace

GmresResult gmres(const LinearOperator& op, std::span<const double> rhs, std::span<double> x,
                  const GmresConfig& config, const LinearOperator& preconditioner) {
  if (config.restart < 1 || config.max_iters < 1 || !(config.rel_tol > 0.0)) {
    throw std::invalid_argument("invalid GMRES configuration");
  }
  if (rhs.size() != x.size()) throw std::invalid_argument("GMRES: size mismatch");

  const std::size_t n = rhs.size();
  const auto m = static_cast<std::size_t>(config.restart);
  GmresResult result;

  const double bnorm = norm(rhs);
  if (bnorm == 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    result.converged = true;
    return result;
  }

  std::vector<std::vector<double>> basis(m + 1, std::vector<double>(n));
  std::vector<std::vector<double>> h(m + 1, std::vector<double>(m, 0.0));
  std::vector<double> cs(m), sn(m), g(m + 1), y(m);
  std::vector<double> r(n), work(n), z(n);

  auto residual = [&]() {
    op(x, work);
    for (std::size_t k = 0; k < n; ++k) r[k] = rhs[k] - work[k];
    return norm(r);
  };

  double rnorm = residual();
  result.relative_residual = rnorm / bnorm;
  if (result.relative_residual <= config.rel_tol) {
    result.converged = true;
    return result;
  }

  while (result.iterations < config.max_iters) {
    for (std::size_t k = 0; k < n; ++k) basis[0][k] = r[k] / rnorm;
    std::fill(g.begin(), g.end(), 0.0);
    g[0] = rnorm;

    std::size_t used = 0;
    for (std::size_t j = 0; j < m && result.iterations < config.max_iters; ++j) {
      ++result.iterations;
      if (preconditioner) {
        preconditioner(basis[j], z);
        op(z, basis[j + 1]);
      } else {
        op(basis[j], basis[j + 1]);
      }
      auto& v = basis[j + 1];
      for (std::size_t i = 0; i <= j; ++i) {
        h[i][j] = dot(v, basis[i]);
        for (std::size_t k = 0; k < n; ++k) v[k] -= h[i][j] * basis[i][k];
      }
      h[j + 1][j] = norm(v);
      if (h[j + 1][j] > 0.0) {
        for (std::size_t k = 0; k < n; ++k) v[k] /= h[j + 1][j];
      }
      for (std::size_t i = 0; i < j; ++i) {
        const double t = cs[i] * h[i][j] + sn[i] * h[i + 1][j];
        h[i + 1][j] = -sn[i] * h[i][j] + cs[i] * h[i + 1][j];
        h[i][j] = t;
      }
      const double denom = std::hypot(h[j][j], h[j + 1][j]);
      cs[j] = denom == 0.0 ? 1.0 : h[j][j] / denom;
      sn[j] = denom == 0.0 ? 0.0 : h[j + 1][j] / denom;
      h[j][j] = denom;
      h[j + 1][j] = 0.0;
      g[j + 1] = -sn[j] * g[j];
      g[j] = cs[j] * g[j];
      used = j + 1;
      if (std::abs(g[j + 1]) / bnorm <= config.rel_tol) break;
    }

    // Back substitution for the least-squares coefficients.
    for (std::size_t i = used; i-- > 0;) {
      double s = g[i];
      for (std::size_t k = i + 1; k < used; ++k) s -= h[i][k] * y[k];
      y[i] = s / h[i][i];
    }
    std::fill(work.begin(), work.end(), 0.0);
    for (std::size_t i = 0; i < used; ++i) {
      for (std::size_t k = 0; k < n; ++k) work[k] += y[i] * basis[i][k];
    }
    if (preconditioner) {
      preconditioner(work, z);
      for (std::size_t k = 0; k < n; ++k) x[k] += z[k];
    } else {
      for (std::size_t k = 0; k < n; ++k) x[k] += work[k];
    }

    rnorm = residual();
    result.relative_residual = rnorm / bnorm;
    if (result.relative_residual <= config.rel_tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace hypch
