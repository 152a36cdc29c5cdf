#include "hypch/physics.hpp"

#include <stdexcept>
#include <string>

namespace hypch {

StateVector make_point(int dim, double c, double phi, double w, std::array<double, 2> q,
                       std::array<double, 2> p) {
  StateVector s(dim);
  s[0] = c;
  for (int k = 0; k < dim; ++k) {
    s[s.q_slot(k)] = q[static_cast<std::size_t>(k)];
    s[s.p_slot(k)] = p[static_cast<std::size_t>(k)];
  }
  s[s.w_slot()] = w;
  s[s.phi_slot()] = phi;
  return s;
}

EigenData eigen(double c, const ModelParams& params, int dim) {
  const double radicand = potential_d2(c) + params.alpha;
  if (radicand < 0.0) {
    throw std::domain_error("g''(c) + alpha < 0 at c = " + std::to_string(c) +
                            ": complex characteristic speeds");
  }
  const double fast = std::sqrt(radicand / params.tau);
  const double slow = std::sqrt(params.gamma / params.beta);

  EigenData e;
  const int n = 3 + 2 * dim;
  e.lambdas.assign(static_cast<std::size_t>(n), 0.0);
  e.lambdas.front() = -fast;
  e.lambdas[1] = -slow;
  e.lambdas[static_cast<std::size_t>(n - 2)] = slow;
  e.lambdas.back() = fast;
  e.lambda_max = std::max(fast, slow);
  return e;
}

double eigen_det_R(double c, const ModelParams& params) {
  const double denom = params.alpha + potential_d2(c);
  if (!(denom > 0.0)) {
    throw std::domain_error("eigen_det_R requires alpha + g''(c) > 0");
  }
  return -4.0 * std::sqrt(params.beta * params.gamma / params.tau / denom);
}

EnergySplit energy_split(const StateVector& s, const ModelParams& params) {
  double q2 = 0.0;
  double p2 = 0.0;
  for (int k = 0; k < s.dim; ++k) {
    q2 += s.q(k) * s.q(k);
    p2 += s.p(k) * s.p(k);
  }
  const double diff = s.c() - s.phi();
  EnergySplit e;
  e.e_I = potential(s.c()) + 0.5 * params.alpha * diff * diff + q2 / (2.0 * params.tau);
  e.e_II = 0.5 * params.gamma * p2 + s.w() * s.w() / (2.0 * params.beta);
  return e;
}

}  // namespace hypch
