#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "pdm/nu.hpp"
#include "pdm/params.hpp"

namespace pdm::testing {

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

/// e = b0 = mu = eta = 1, beta = kz = alpha = 0.
inline ParamValues unit_values() {
  ParamValues v;
  v.e = 1.0;
  v.b0 = 1.0;
  v.mu = 1.0;
  return v;
}

/// Model C set with a negative charge, an offset field and all three
/// confining terms switched on.
inline ParamValues yukawa_values(double delta) {
  ParamValues v = unit_values();
  v.e = -1.0;
  v.beta = -0.5;
  v.kz = 1.0;
  v.delta = delta;
  v.v0 = 1.0;
  v.v1 = 0.5;
  v.v2 = 0.5;
  return v;
}

/// Deterministic source of random draws for property tests.
class Draws {
 public:
  explicit Draws(unsigned long long seed = 20240901ULL) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Parameters with a magnetic gap and sigma = 1.
  ParamValues gapped_params() {
    ParamValues v;
    v.e = uniform(0.2, 2.0) * (integer(0, 1) == 0 ? 1.0 : -1.0);
    v.b0 = uniform(0.1, 3.0);
    v.mu = uniform(0.1, 2.0) * (integer(0, 1) == 0 ? 1.0 : -1.0);
    v.beta = uniform(-2.0, 2.0);
    v.kz = uniform(0.0, 2.0);
    v.eta = uniform(0.2, 3.0);
    v.alpha_ab = uniform(-1.5, 1.5);
    return v;
  }

  /// NU coefficients with both radicands non-negative.
  nu::NUCoefficients nu_coefficients() {
    while (true) {
      nu::NUCoefficients c{uniform(-0.25, 4.0), uniform(-4.0, 4.0), uniform(-5.0, 20.0), uniform(0.0, 8.0)};
      if (nu::radicand_c(c) >= 0.0) return c;
    }
  }

 private:
  std::mt19937_64 rng_;
};

/// Max of |sigma chi'' + tau chi' + lambda_n chi| over xi in [0.01, 0.99],
/// relative to the largest of the three terms; five-point differences.
inline double hypergeometric_residual(const nu::NUCoefficients& c, int n) {
  const double h = 1e-3;
  const nu::LinearPoly tau = nu::tau(c);
  const double lambda = nu::lambda_n(c, n);
  auto chi = [&](double xi) { return nu::chi(c, n, xi); };
  double worst = 0.0;
  double scale = 0.0;
  for (int i = 0; i <= 98; ++i) {
    const double xi = 0.01 + 0.01 * i;
    const double f0 = chi(xi);
    const double fp = chi(xi + h), fm = chi(xi - h), fpp = chi(xi + 2 * h), fmm = chi(xi - 2 * h);
    const double d1 = (fmm - 8 * fm + 8 * fp - fpp) / (12 * h);
    const double d2 = (-fmm + 16 * fm - 30 * f0 + 16 * fp - fpp) / (12 * h * h);
    const double a = xi * (1 - xi) * d2, b = tau(xi) * d1, l = lambda * f0;
    worst = std::max(worst, std::abs(a + b + l));
    scale = std::max({scale, std::abs(a), std::abs(b), std::abs(l)});
  }
  return scale == 0.0 ? worst : worst / scale;
}

}  // namespace pdm::testing
