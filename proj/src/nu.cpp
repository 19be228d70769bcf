#include "pdm/nu.hpp"

#include <cmath>
#include <string>

#include "pdm/error.hpp"
#include "pdm/specfun.hpp"

namespace pdm::nu {

namespace {

double sqrt_c(const NUCoefficients& c) { return std::sqrt(radicand_c(c)); }

double q_of(const NUCoefficients& c) { return std::sqrt(c.a1t + 0.25); }

void require_finite(const NUCoefficients& c) {
  if (!std::isfinite(c.a1t) || !std::isfinite(c.a2t) || !std::isfinite(c.a3t) || !std::isfinite(c.a4t)) {
    throw DomainError("NU coefficients must be finite");
  }
}

void require_degree(int n) {
  if (n < 0) throw DomainError("NU degree must be >= 0");
}

void require_unit_interval(double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw DomainError("xi must lie in [0, 1]");
}

}  // namespace

double radicand_c(const NUCoefficients& c) { return c.a1t - c.a2t + c.a4t; }

void validate(const NUCoefficients& c) {
  require_finite(c);
  if (4.0 * c.a1t + 1.0 < 0.0) {
    throw DomainError("negative radicand: 4*a1t + 1 = " + std::to_string(4.0 * c.a1t + 1.0) + " < 0");
  }
  if (radicand_c(c) < 0.0) {
    throw DomainError("negative radicand: a1t - a2t + a4t = " + std::to_string(radicand_c(c)) + " < 0");
  }
}

RootQuadratic root_quadratic(const NUCoefficients& c, double k) {
  // xi^2/4 - sigma~(xi) + k sigma(xi) with
  // sigma~ = -(a1 - a2 + a4) + (-a2 + a3 + 2 a4) xi - (a3 + a4) xi^2.
  const double s1 = -c.a2t + c.a3t + 2.0 * c.a4t;
  return {0.25 - k + c.a3t + c.a4t, k - s1, radicand_c(c)};
}

double k_minus(const NUCoefficients& c) {
  validate(c);
  return -(2.0 * c.a1t - c.a2t - c.a3t) - std::sqrt(radicand_c(c) * (4.0 * c.a1t + 1.0));
}

double k_plus(const NUCoefficients& c) {
  validate(c);
  throw DomainError("unphysical branch: k_+ gives tau' >= 0 and no normalizable solution");
}

LinearPoly pi_minus(const NUCoefficients& c) {
  validate(c);
  const double rc = sqrt_c(c);
  return {-0.5 - rc - q_of(c), rc};
}

LinearPoly tau(const NUCoefficients& c) {
  const LinearPoly p = pi_minus(c);
  return {-1.0 + 2.0 * p.slope, 1.0 + 2.0 * p.intercept};
}

double lambda_of(const NUCoefficients& c) { return k_minus(c) + pi_minus(c).slope; }

double lambda_n(const NUCoefficients& c, int n) {
  require_degree(n);
  validate(c);
  const double nd = n;
  return nd * (2.0 + 2.0 * (sqrt_c(c) + q_of(c))) + nd * (nd - 1.0);
}

double nu_quantize(double a1t, double a2t, double a4t, int n) {
  require_degree(n);
  NUCoefficients c{a1t, a2t, 0.0, a4t};
  validate(c);
  const double target = lambda_n(c, n);
  auto mismatch = [&](double a3) {
    c.a3t = a3;
    return lambda_of(c) - target;
  };

  // lambda_of is increasing in a3; grow a symmetric bracket until it straddles the root.
  double lo = -1.0;
  double hi = 1.0;
  double f_lo = mismatch(lo);
  double f_hi = mismatch(hi);
  for (int grow = 0; f_lo > 0.0 || f_hi < 0.0; ++grow) {
    if (grow > 1100) throw DomainError("nu_quantize: failed to bracket the quantization root");
    if (f_lo > 0.0) {
      lo *= 2.0;
      f_lo = mismatch(lo);
    }
    if (f_hi < 0.0) {
      hi *= 2.0;
      f_hi = mismatch(hi);
    }
  }

  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = mismatch(mid);
    if (f_mid == 0.0) return mid;
    if (f_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(mismatch(lo)) <= std::abs(mismatch(hi)) ? lo : hi;
}

double kappa(const NUCoefficients& c) {
  validate(c);
  return 2.0 * sqrt_c(c);
}

double upsilon(const NUCoefficients& c) {
  validate(c);
  return std::sqrt(4.0 * c.a1t + 1.0);
}

double phi(const NUCoefficients& c, double xi) {
  require_unit_interval(xi);
  return std::pow(xi, sqrt_c(c)) * std::pow(1.0 - xi, 0.5 + 0.5 * upsilon(c));
}

double chi(const NUCoefficients& c, int n, double xi) {
  require_unit_interval(xi);
  return jacobi(n, kappa(c), upsilon(c), 1.0 - 2.0 * xi);
}

double nu_eigenfunction(const NUCoefficients& c, int n, double xi) { return phi(c, xi) * chi(c, n, xi); }

double weight_function(const NUCoefficients& c, double xi) {
  require_unit_interval(xi);
  return std::pow(xi, kappa(c)) * std::pow(1.0 - xi, upsilon(c));
}

NUSolution solve(const NUCoefficients& c) {
  const LinearPoly p = pi_minus(c);
  NUSolution s{k_minus(c), p.slope, p.intercept, 0.0, kappa(c), upsilon(c)};
  s.lambda = s.k_minus + s.pi_slope;
  if (!(s.tau_slope() < 0.0)) throw DomainError("NU solution violates tau' < 0");
  const double a_minus = root_quadratic(c, s.k_minus).a;
  // A_- equals (sqrt(C) + q)^2 analytically; allow rounding below zero.
  if (a_minus < -1e-12 * (1.0 + std::abs(c.a3t) + std::abs(c.a4t))) {
    throw DomainError("NU solution violates A_- >= 0");
  }
  return s;
}

}  // namespace pdm::nu
