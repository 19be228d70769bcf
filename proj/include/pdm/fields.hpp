#pragma once

#include "pdm/params.hpp"

namespace pdm {

/// Field quantities at one radius. rho > 0.
struct FieldSample {
  double rho = 0.0;
  double s = 0.0;      // generating function S(rho)
  double b_z = 0.0;    // z-component of the magnetic field
  double a_phi = 0.0;  // total azimuthal vector potential (field part + flux line)
};

/// S(rho) = (2 mu / (2 - sigma)) rho^-sigma + beta / rho^2.
///
/// Throws DomainError for sigma = 2 (the generator is undefined there) and
/// for rho <= 0.
double shape_function(double rho, const PhysicalParams& params);

/// B_z = b0 mu / rho^sigma. Defined for every sigma, including 2.
double magnetic_field(double rho, const PhysicalParams& params);

/// A_phi = (b0 / 2) rho S(rho) + alpha / (e rho).
double vector_potential(double rho, const PhysicalParams& params);

FieldSample sample_field(double rho, const PhysicalParams& params);

/// |(1/rho) d(rho A1_phi)/drho - B_z| by central differences with step h,
/// where A1 is the field part of the vector potential (the flux line is
/// curl-free away from the axis). h <= 0 selects the default 1e-4 * rho.
double verify_curl(double rho, const PhysicalParams& params, double h = 0.0);

/// |S + (rho/2) S' - mu / rho^sigma| / |mu / rho^sigma| with S' by central
/// differences (step h, default 1e-4 * rho). Requires mu != 0.
double shape_identity_residual(double rho, const PhysicalParams& params, double h = 0.0);

}  // namespace pdm
