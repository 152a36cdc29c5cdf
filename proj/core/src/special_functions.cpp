#include "hypch/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hypch {

double elliptic_K(double s) {
  if (!(s >= 0.0) || !(s < 1.0)) throw std::domain_error("elliptic_K: modulus must lie in [0, 1)");
  double a = 1.0;
  double b = std::sqrt((1.0 - s) * (1.0 + s));
  for (int it = 0; it < 64 && std::abs(a - b) > 1e-16 * a; ++it) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (a + b);
}

JacobiValues jacobi(double x, double s) {
  if (!(s >= 0.0) || !(s <= 1.0)) throw std::domain_error("jacobi: modulus must lie in [0, 1]");
  if (s < 1e-12) return {std::sin(x), std::cos(x), 1.0};
  if (1.0 - s < 1e-12) {
    const double sech = 1.0 / std::cosh(x);
    return {std::tanh(x), sech, sech};
  }
  constexpr int kMax = 32;
  std::array<double, kMax + 1> a{};
  std::array<double, kMax + 1> c{};
  a[0] = 1.0;
  double b = std::sqrt((1.0 - s) * (1.0 + s));
  c[0] = s;
  int n = 0;
  while (n < kMax && std::abs(c[static_cast<std::size_t>(n)]) > 1e-16 * a[static_cast<std::size_t>(n)]) {
    const auto k = static_cast<std::size_t>(n);
    a[k + 1] = 0.5 * (a[k] + b);
    c[k + 1] = 0.5 * (a[k] - b);
    b = std::sqrt(a[k] * b);
    ++n;
  }
  double phi = std::ldexp(a[static_cast<std::size_t>(n)] * x, n);
  for (int k = n; k > 0; --k) {
    const auto kk = static_cast<std::size_t>(k);
    phi = 0.5 * (phi + std::asin(c[kk] / a[kk] * std::sin(phi)));
  }
  // cos(phi_0)/cos(phi_1 - phi_0) is 0/0 at odd quarter periods.
  const double sn = std::sin(phi);
  return {sn, std::cos(phi), std::sqrt(std::max(0.0, (1.0 - s * sn) * (1.0 + s * sn)))};
}

double jacobi_sn(double x, double s) { return jacobi(x, s).sn; }

void SnSolutionSpec::validate() const {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in [0, 1]");
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (!std::isfinite(x0)) throw std::invalid_argument("x0 must be finite");
}

double SnSolutionSpec::amplitude() const { return std::sqrt(1.0 - epsilon); }
double SnSolutionSpec::frequency() const { return std::sqrt((1.0 + epsilon) / (2.0 * gamma)); }
double SnSolutionSpec::modulus() const { return std::sqrt((1.0 - epsilon) / (1.0 + epsilon)); }

double sn_solution(const SnSolutionSpec& spec, double x) {
  spec.validate();
  return spec.amplitude() * jacobi_sn(spec.frequency() * (x - spec.x0), spec.modulus());
}

double sn_solution_d1(const SnSolutionSpec& spec, double x) {
  spec.validate();
  const double k = spec.frequency();
  const auto j = jacobi(k * (x - spec.x0), spec.modulus());
  return spec.amplitude() * k * j.cn * j.dn;
}

double sn_solution_d2(const SnSolutionSpec& spec, double x) {
  spec.validate();
  const double k = spec.frequency();
  const double s = spec.modulus();
  const double sn = jacobi_sn(k * (x - spec.x0), s);
  // sn'' = -(1 + s^2) sn + 2 s^2 sn^3
  return spec.amplitude() * k * k * (-(1.0 + s * s) * sn + 2.0 * s * s * sn * sn * sn);
}

double sn_wavelength(const SnSolutionSpec& spec) {
  spec.validate();
  if (spec.epsilon == 0.0) throw std::domain_error("sn_wavelength: infinite period at epsilon = 0");
  return 4.0 * std::sqrt(2.0 * spec.gamma / (1.0 + spec.epsilon)) * elliptic_K(spec.modulus());
}

}  // namespace hypch
