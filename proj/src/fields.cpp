#include "pdm/fields.hpp"

#include <cmath>

#include "pdm/error.hpp"

namespace pdm {

namespace {

void require_positive_rho(double rho) {
  if (!(rho > 0.0)) throw DomainError("field formulas require rho > 0");
}

double default_step(double rho, double h) { return h > 0.0 ? h : 1e-4 * rho; }

// rho * A1_phi = (b0 / 2) rho^2 S(rho)
double flux_function(double rho, const PhysicalParams& params) {
  return 0.5 * params.b0() * rho * rho * shape_function(rho, params);
}

}  // namespace

double shape_function(double rho, const PhysicalParams& params) {
  require_positive_rho(rho);
  const double sigma = params.sigma();
  if (sigma == 2.0) throw DomainError("generator undefined at sigma=2");
  return 2.0 * params.mu() / (2.0 - sigma) * std::pow(rho, -sigma) + params.beta() / (rho * rho);
}

double magnetic_field(double rho, const PhysicalParams& params) {
  require_positive_rho(rho);
  return params.b0() * params.mu() * std::pow(rho, -params.sigma());
}

double vector_potential(double rho, const PhysicalParams& params) {
  require_positive_rho(rho);
  return 0.5 * params.b0() * rho * shape_function(rho, params) + params.alpha_ab() / (params.e() * rho);
}

FieldSample sample_field(double rho, const PhysicalParams& params) {
  return {rho, shape_function(rho, params), magnetic_field(rho, params), vector_potential(rho, params)};
}

double verify_curl(double rho, const PhysicalParams& params, double h) {
  h = default_step(rho, h);
  if (!(rho - h > 0.0)) throw DomainError("verify_curl requires rho - h > 0");
  const double derivative = (flux_function(rho + h, params) - flux_function(rho - h, params)) / (2.0 * h);
  return std::abs(derivative / rho - magnetic_field(rho, params));
}

double shape_identity_residual(double rho, const PhysicalParams& params, double h) {
  h = default_step(rho, h);
  if (!(rho - h > 0.0)) throw DomainError("shape_identity_residual requires rho - h > 0");
  if (params.mu() == 0.0) throw DomainError("shape identity is relative to mu / rho^sigma; mu must be nonzero");
  const double ds = (shape_function(rho + h, params) - shape_function(rho - h, params)) / (2.0 * h);
  const double target = params.mu() * std::pow(rho, -params.sigma());
  return std::abs(shape_function(rho, params) + 0.5 * rho * ds - target) / std::abs(target);
}

}  // namespace pdm
