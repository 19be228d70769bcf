#include "pdm/models.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "pdm/error.hpp"

namespace pdm {

namespace {

void require_positive_rho(double rho) {
  if (!(rho > 0.0)) throw DomainError("model formulas require rho > 0");
}

void require_sigma_one(const PhysicalParams& params) {
  if (params.sigma() != 1.0) {
    throw DomainError("closed forms require sigma = 1 (got " + std::to_string(params.sigma()) + ")");
  }
}

void require_gap(const PhysicalParams& params) {
  if (!params.has_magnetic_gap()) {
    throw BoundStateError("no bound spectrum: kz^2 + e^2 b0^2 mu^2 must be > 0", params.magnetic_gap_sq());
  }
}

// m~ - e b0 beta / 2: the shifted index that appears in every centrifugal term.
double w_of(const QuantumState& state, const PhysicalParams& params) {
  return m_tilde(state, params) - 0.5 * params.e() * params.b0() * params.beta();
}

// rho * S(rho), finite for tiny rho where S^2 alone would overflow.
double rho_shape(double rho, const PhysicalParams& params) {
  const double sigma = params.sigma();
  if (sigma == 2.0) throw DomainError("generator undefined at sigma=2");
  return 2.0 * params.mu() / (2.0 - sigma) * std::pow(rho, 1.0 - sigma) + params.beta() / rho;
}

struct CRadicands {
  double r1 = 0.0;  // delta^2 (a1t - a2t + a4t)
  double r2 = 0.0;  // a1t + 1/4
};

CRadicands c_radicands(double w, const PhysicalParams& p) {
  const double d = p.delta();
  const double ebm = p.e() * p.b0() * p.mu();
  const double r1 = d * d * w * w + d * d * p.v2() + 0.25 * d * d - 2.0 * ebm * w * d - d * p.v1() +
                    p.magnetic_gap_sq();
  const double r2 = w * w + p.v2() + 1.0 / 16.0;
  return {r1, r2};
}

}  // namespace

std::string_view model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::A: return "a";
    case ModelKind::B: return "b";
    case ModelKind::C: return "c";
  }
  return "?";
}

std::optional<ModelKind> parse_model(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  switch (std::tolower(static_cast<unsigned char>(name[0]))) {
    case 'a': return ModelKind::A;
    case 'b': return ModelKind::B;
    case 'c': return ModelKind::C;
    default: return std::nullopt;
  }
}

double mass_function(double rho, ModelKind kind, const PhysicalParams& params) {
  require_positive_rho(rho);
  switch (kind) {
    case ModelKind::A: return params.eta() / rho;
    case ModelKind::B: return params.eta() / (rho * rho);
    case ModelKind::C: return params.eta() * std::exp(-params.delta() * rho) / rho;
  }
  return 0.0;
}

MassLogDerivatives mass_log_derivatives(double rho, ModelKind kind, const PhysicalParams& params) {
  require_positive_rho(rho);
  const double inv = 1.0 / rho;
  switch (kind) {
    case ModelKind::A: return {-inv, 2.0 * inv * inv};
    case ModelKind::B: return {-2.0 * inv, 6.0 * inv * inv};
    case ModelKind::C: {
      const double f = -params.delta() - inv;
      return {f, f * f + inv * inv};
    }
  }
  return {};
}

double mass_term(double rho, ModelKind kind, const PhysicalParams& params) {
  const MassLogDerivatives d = mass_log_derivatives(rho, kind, params);
  return 5.0 / 16.0 * d.first * d.first - 0.25 * d.second - 0.25 * d.first / rho;
}

double confining_potential(double rho, const PhysicalParams& params) {
  require_positive_rho(rho);
  return -params.v0() * std::exp(-params.delta() * rho) / rho - params.v1() / rho + params.v2() / (rho * rho);
}

double effective_potential(double rho, ModelKind kind, const QuantumState& state, const PhysicalParams& params,
                           double energy) {
  require_positive_rho(rho);
  const double mt = m_tilde(state, params);
  double w = (mt * mt - 0.25) / (rho * rho);
  if (params.b0() != 0.0) {
    const double eb = params.e() * params.b0();
    const double rs = rho_shape(rho, params);
    w += -eb * mt * rs / rho + 0.25 * eb * eb * rs * rs - eb * eb * params.mu() * params.mu();
  }
  w -= mass_function(rho, kind, params) * energy;
  if (kind == ModelKind::C) w += confining_potential(rho, params);
  return w + mass_term(rho, kind, params);
}

double mass_function_ga(double rho, const PhysicalParams& params) {
  require_positive_rho(rho);
  const double d = params.delta();
  if (!(d > 0.0)) throw DomainError("Greene-Aldrich form requires delta > 0");
  return params.eta() * d / std::expm1(d * rho);
}

double effective_potential_ga(double rho, const QuantumState& state, const PhysicalParams& params, double energy) {
  require_positive_rho(rho);
  require_sigma_one(params);
  const double d = params.delta();
  if (!(d > 0.0)) throw DomainError("Greene-Aldrich form requires delta > 0");
  const ModelCCore c = model_c_coefficients(state, params, energy);
  const double inv = -d / std::expm1(-d * rho);  // ~ 1/rho
  const double yukawa = d / std::expm1(d * rho);  // ~ exp(-delta rho)/rho
  return c.a1 * inv * inv + c.a2 * inv - c.a3 * yukawa + d * d / 16.0;
}

ModelACore model_a_core(const QuantumState& state, const PhysicalParams& params, double energy) {
  const double w = w_of(state, params);
  const double ebm = params.e() * params.b0() * params.mu();
  return {2.0 * ebm * w + params.eta() * energy, std::sqrt(w * w + 1.0 / 16.0),
          std::sqrt(params.magnetic_gap_sq())};
}

double model_b_ell_sq(const QuantumState& state, const PhysicalParams& params, double energy) {
  const double w = w_of(state, params);
  return w * w + 0.25 - params.eta() * energy;
}

ModelBCore model_b_core(const QuantumState& state, const PhysicalParams& params) {
  validate(state);
  require_gap(params);
  const double w = w_of(state, params);
  const double decay = std::sqrt(params.magnetic_gap_sq());
  const double beta_acute = 2.0 * params.e() * params.b0() * params.mu() * w;
  const double ell = beta_acute / (2.0 * decay) - state.n_rho - 0.5;
  if (!(ell > 0.0)) {
    throw BoundStateError("state not bound for these parameters: effective angular momentum " +
                              std::to_string(ell) + " <= 0",
                          ell);
  }
  return {beta_acute, ell, decay};
}

ModelCCore model_c_coefficients(const QuantumState& state, const PhysicalParams& params, double energy,
                                bool require_nu) {
  const double w = w_of(state, params);
  const double d = params.delta();
  const double ebm = params.e() * params.b0() * params.mu();

  ModelCCore c;
  c.a1 = w * w + params.v2() - 3.0 / 16.0;
  c.a2 = -2.0 * ebm * w + 3.0 * d / 8.0 - params.v1();
  c.a3 = params.v0() + params.eta() * energy;
  c.a4 = params.magnetic_gap_sq() + d * d / 16.0;

  const CRadicands r = c_radicands(w, params);
  if (r.r1 < 0.0) throw BoundStateError("no real bound level: decay radicand is negative", r.r1);
  if (r.r2 < 0.0) throw BoundStateError("no real bound level: 4 a1 + 1 is negative", r.r2);
  c.eps1t = std::sqrt(r.r1) + d * std::sqrt(r.r2);
  c.eps2t = 2.0 * std::sqrt(r.r1 * r.r2) + 2.0 * (d * w * w + d * params.v2() - ebm * w) - params.v1();

  if (d > 0.0) {
    nu::NUCoefficients nc{c.a1, -c.a2 / d, c.a3 / d, c.a4 / (d * d)};
    // Clamp rounding: r1 >= 0 was checked above, so a negative C here is noise.
    if (nu::radicand_c(nc) < 0.0) nc.a2t = nc.a1t + nc.a4t;
    c.nu = nc;
    c.kappa = nu::kappa(nc);
    c.upsilon = nu::upsilon(nc);
  } else if (require_nu) {
    throw DomainError("delta = 0: the NU map is undefined; use the model A reduction");
  }
  return c;
}

double model_a_energy(const QuantumState& state, const PhysicalParams& params) {
  validate(state);
  require_sigma_one(params);
  require_gap(params);
  const double e = params.e();
  const double b0 = params.b0();
  const double mu = params.mu();
  const double mt = m_tilde(state, params);
  const ModelACore core = model_a_core(state, params, 0.0);
  return (params.beta() * mu * e * e * b0 * b0 - 2.0 * e * mt * b0 * mu +
          2.0 * core.decay * (state.n_rho + 0.5 + core.ell_tilde_abs)) /
         params.eta();
}

double model_b_energy(const QuantumState& state, const PhysicalParams& params) {
  require_sigma_one(params);
  const ModelBCore core = model_b_core(state, params);
  const double w = w_of(state, params);
  return (w * w + 0.25 - core.ell_acute_abs * core.ell_acute_abs) / params.eta();
}

double model_c_energy(const QuantumState& state, const PhysicalParams& params) {
  validate(state);
  require_sigma_one(params);
  const ModelCCore c = model_c_coefficients(state, params, 0.0);
  const double n = state.n_rho;
  return ((n * n + n + 0.5) * params.delta() + (2.0 * n + 1.0) * c.eps1t + c.eps2t - params.v0()) / params.eta();
}

double closed_form_energy(ModelKind kind, const QuantumState& state, const PhysicalParams& params) {
  switch (kind) {
    case ModelKind::A: return model_a_energy(state, params);
    case ModelKind::B: return model_b_energy(state, params);
    case ModelKind::C: return model_c_energy(state, params);
  }
  return 0.0;
}

std::optional<double> try_closed_form_energy(ModelKind kind, const QuantumState& state,
                                             const PhysicalParams& params) {
  try {
    return closed_form_energy(kind, state, params);
  } catch (const BoundStateError&) {
    return std::nullopt;
  }
}

GreeneAldrich greene_aldrich(double rho, double delta) {
  if (!(rho > 0.0) || !(delta > 0.0)) throw DomainError("greene_aldrich requires rho > 0 and delta > 0");
  const double exact = 1.0 / rho;
  const double approx = -delta / std::expm1(-delta * rho);
  return {exact, approx, std::abs(approx - exact) * rho};
}

}  // namespace pdm
