#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <limits>

#include "pdm/error.hpp"
#include "pdm/models.hpp"
#include "pdm/specfun.hpp"

namespace pdm {

namespace {

// Integral of [rho^(ell+1/2) exp(-k rho) L_n^(2 ell)(2 k rho)]^2 over (0, inf).
double laguerre_norm_sq(int n, double ell, double k) {
  const double a = 2.0 * ell;
  const double log_i = -(a + 2.0) * std::log(2.0 * k) + std::lgamma(n + a + 1.0) - std::lgamma(n + 1.0);
  return std::exp(log_i) * (2.0 * n + a + 1.0);
}

}  // namespace

Wavefunction::Wavefunction(ModelKind kind, const QuantumState& state, const PhysicalParams& params, WaveForm form)
    : kind_(kind), state_(state), params_(params), form_(form) {
  energy_ = closed_form_energy(kind, state, params);
  switch (kind) {
    case ModelKind::A: {
      const ModelACore core = model_a_core(state, params, energy_);
      ell_ = core.ell_tilde_abs;
      decay_ = core.decay;
      norm_ = 1.0 / std::sqrt(laguerre_norm_sq(state.n_rho, ell_, decay_));
      return;
    }
    case ModelKind::B: {
      const ModelBCore core = model_b_core(state, params);
      ell_ = core.ell_acute_abs;
      decay_ = core.decay;
      norm_ = 1.0 / std::sqrt(laguerre_norm_sq(state.n_rho, ell_, decay_));
      return;
    }
    case ModelKind::C: {
      if (!(params.delta() > 0.0)) throw DomainError("Model C wavefunction requires delta > 0");
      const ModelCCore core = model_c_coefficients(state, params, energy_, true);
      nu_ = *core.nu;
      kappa_ = core.kappa;
      upsilon_ = core.upsilon;
      decay_ = 0.5 * params.delta() * kappa_;
      if (!(decay_ > 0.0)) throw BoundStateError("Model C state is not normalizable: kappa = 0", kappa_);
      // Integrate in t = decay * rho so the quadrature sees an O(1) scale.
      boost::math::quadrature::exp_sinh<double> integrator;
      const double d = decay_;
      auto integrand = [this, d](double t) {
        const double u = shape(t / d);
        return u * u;
      };
      const double total = integrator.integrate(integrand, 0.0, std::numeric_limits<double>::infinity(), 1e-13) / d;
      if (!(total > 0.0) || !std::isfinite(total)) throw DomainError("Model C wavefunction norm is not finite");
      norm_ = 1.0 / std::sqrt(total);
      return;
    }
  }
}

double Wavefunction::shape(double rho) const {
  if (!(rho >= 0.0)) throw DomainError("wavefunction requires rho >= 0");
  switch (kind_) {
    case ModelKind::A:
    case ModelKind::B: {
      const double x = decay_ * rho;
      if (x > 800.0) return 0.0;
      return std::pow(rho, ell_ + 0.5) * std::exp(-x) * laguerre(state_.n_rho, 2.0 * ell_, 2.0 * x);
    }
    case ModelKind::C: {
      const double d = params_.delta();
      const double dr = d * rho;
      if (0.5 * kappa_ * dr > 800.0) return 0.0;
      const double xi = std::exp(-dr);
      if (form_ == WaveForm::xi) {
        return nu::nu_eigenfunction(nu_, state_.n_rho, xi) * std::pow(d, -0.5 * (1.0 + upsilon_));
      }
      return std::pow(rho, 0.5 * (1.0 + upsilon_)) * std::exp(-0.5 * kappa_ * dr) *
             jacobi(state_.n_rho, kappa_, upsilon_, 1.0 - 2.0 * xi);
    }
  }
  return 0.0;
}

double Wavefunction::reduced(double rho) const { return norm_ * shape(rho); }

double Wavefunction::radial(double rho) const {
  return std::sqrt(mass_function(rho, kind_, params_) / rho) * reduced(rho);
}

}  // namespace pdm
