#include "hypch/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypch {

namespace {
void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be finite and > 0");
  }
}
}  // namespace

void ModelParams::validate_hyperbolic() const {
  require_positive(gamma, "gamma");
  require_positive(beta, "beta");
  require_positive(tau, "tau");
  if (!std::isfinite(alpha) || alpha < kCriticalAlpha) {
    throw std::invalid_argument("alpha must be >= alpha_c = 1 (got " + std::to_string(alpha) + ")");
  }
}

ModelParams ModelParams::hyperbolic(double gamma, double alpha, double beta, double tau) {
  ModelParams p{gamma, alpha, beta, tau};
  p.validate_hyperbolic();
  return p;
}

ModelParams ModelParams::reference(double gamma) {
  require_positive(gamma, "gamma");
  ModelParams p;
  p.gamma = gamma;
  return p;
}

}  // namespace hypch
