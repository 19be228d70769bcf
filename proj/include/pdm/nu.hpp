#pragma once

// Nikiforov-Uvarov reduction for the family
//
//   U'' + (1 - xi) / (xi (1 - xi)) U'
//       + [-(a1 - a2 + a4) + (-a2 + a3 + 2 a4) xi - (a3 + a4) xi^2] / (xi (1 - xi))^2 U = 0
//
// on xi in (0, 1), i.e. sigma(xi) = xi (1 - xi) and tau~(xi) = 1 - xi. Writing
// U = phi(xi) chi(xi) turns it into the hypergeometric-type equation
// sigma chi'' + tau chi' + lambda chi = 0, whose polynomial solutions are
// Jacobi polynomials in 1 - 2 xi.
//
// Throughout, C = a1 - a2 + a4 and q = sqrt((4 a1 + 1) / 4); both radicands
// must be non-negative. Only the k_- branch is physical: it is the one that
// gives tau' < 0.

namespace pdm::nu {

struct NUCoefficients {
  double a1t = 0.0;
  double a2t = 0.0;
  double a3t = 0.0;
  double a4t = 0.0;
};

/// Throws DomainError naming the violated radicand condition.
void validate(const NUCoefficients& c);

/// a1 - a2 + a4, the constant term of the quadratic under the root.
double radicand_c(const NUCoefficients& c);

/// p(xi) = slope * xi + intercept
struct LinearPoly {
  double slope = 0.0;
  double intercept = 0.0;
  double operator()(double xi) const noexcept { return slope * xi + intercept; }
};

/// Coefficients of A xi^2 + B xi + C, the expression under the square root of
/// pi(xi) for a trial constant k.
struct RootQuadratic {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};
RootQuadratic root_quadratic(const NUCoefficients& c, double k);

double k_minus(const NUCoefficients& c);

/// The other root of B^2 = 4 A C. Always throws: that branch makes tau' >= 0
/// and is rejected as unphysical.
[[noreturn]] double k_plus(const NUCoefficients& c);

/// pi_-(xi) = -xi/2 - [(sqrt(C) + q) xi - sqrt(C)]
LinearPoly pi_minus(const NUCoefficients& c);

/// tau(xi) = tau~(xi) + 2 pi_-(xi)
LinearPoly tau(const NUCoefficients& c);

/// lambda = k_- + pi_-'
double lambda_of(const NUCoefficients& c);

/// lambda_n = -n tau' - n (n - 1) sigma'' / 2
double lambda_n(const NUCoefficients& c, int n);

/// The a3 for which lambda_of == lambda_n(n), found by bracketed bisection.
double nu_quantize(double a1t, double a2t, double a4t, int n);

/// Jacobi parameters: kappa = 2 sqrt(C), upsilon = sqrt(4 a1 + 1).
double kappa(const NUCoefficients& c);
double upsilon(const NUCoefficients& c);

/// phi(xi) = xi^sqrt(C) (1 - xi)^(1/2 + upsilon/2)
double phi(const NUCoefficients& c, double xi);

/// chi_n(xi) = P_n^(kappa, upsilon)(1 - 2 xi), unnormalized.
double chi(const NUCoefficients& c, int n, double xi);

/// U(xi) = phi(xi) chi_n(xi), unnormalized. xi in [0, 1].
double nu_eigenfunction(const NUCoefficients& c, int n, double xi);

/// omega(xi) = xi^kappa (1 - xi)^upsilon, the weight with (sigma omega)' = tau omega.
double weight_function(const NUCoefficients& c, double xi);

/// Everything the reduction derives from one coefficient set.
struct NUSolution {
  double k_minus = 0.0;
  double pi_slope = 0.0;
  double pi_intercept = 0.0;
  double lambda = 0.0;
  double kappa = 0.0;
  double upsilon = 0.0;

  double tau_slope() const noexcept { return -1.0 + 2.0 * pi_slope; }
};

/// Builds the solution and checks tau' < 0 and A_- >= 0.
NUSolution solve(const NUCoefficients& c);

}  // namespace pdm::nu
