#pragma once

#include <optional>
#include <string_view>

#include "pdm/nu.hpp"
#include "pdm/params.hpp"

namespace pdm {

/// A: g = eta / rho, V = 0.
/// B: g = eta / rho^2, V = 0.
/// C: g = eta exp(-delta rho) / rho with the Yukawa plus Kratzer potential.
enum class ModelKind { A, B, C };

std::string_view model_name(ModelKind kind);

/// Accepts "a", "b", "c" in either case.
std::optional<ModelKind> parse_model(std::string_view name);

/// Which radial equation to use for Model C. The Greene-Aldrich form replaces
/// 1/rho by delta / (1 - exp(-delta rho)) and is the equation the closed-form
/// spectrum solves exactly.
enum class ModelForm { exact, greene_aldrich };

/// g(rho), always > 0. rho > 0.
double mass_function(double rho, ModelKind kind, const PhysicalParams& params);

/// g'/g and g''/g in closed form.
struct MassLogDerivatives {
  double first = 0.0;
  double second = 0.0;
};
MassLogDerivatives mass_log_derivatives(double rho, ModelKind kind, const PhysicalParams& params);

/// 5/16 (g'/g)^2 - 1/4 g''/g - 1/4 g'/(rho g): the mass-derivative part of the
/// effective potential.
double mass_term(double rho, ModelKind kind, const PhysicalParams& params);

/// -v0 exp(-delta rho)/rho - v1/rho + v2/rho^2.
double confining_potential(double rho, const PhysicalParams& params);

/// Potential W(rho) of the reduced equation -U'' + W U = e_tilde U.
///
/// W = (m~^2 - 1/4)/rho^2 - e m~ b0 S + (e b0 / 2)^2 rho^2 S^2 - e^2 b0^2 mu^2
///     - g E + V + mass_term,
/// with S the generating function of the field. Valid for any sigma != 2, so
/// the numerical solver can handle fields without a closed form. The confining
/// potential V only enters Model C. W depends on E only through -g(rho) E.
double effective_potential(double rho, ModelKind kind, const QuantumState& state, const PhysicalParams& params,
                           double energy);

/// Model C potential with every 1/rho replaced by its Greene-Aldrich form.
/// Requires delta > 0 and sigma = 1.
double effective_potential_ga(double rho, const QuantumState& state, const PhysicalParams& params, double energy);

/// delta exp(-delta rho) / (1 - exp(-delta rho)) * eta: the E coefficient of the
/// Greene-Aldrich potential (the approximated g).
double mass_function_ga(double rho, const PhysicalParams& params);

struct ModelACore {
  double alpha_tilde = 0.0;    // 2 e m~ b0 mu - e^2 b0^2 mu beta + eta E
  double ell_tilde_abs = 0.0;  // sqrt((m~ - e b0 beta / 2)^2 + 1/16)
  double decay = 0.0;          // sqrt(kz^2 + e^2 b0^2 mu^2)
};
ModelACore model_a_core(const QuantumState& state, const PhysicalParams& params, double energy);

struct ModelBCore {
  double beta_acute = 0.0;     // 2 e m~ b0 mu - e^2 b0^2 mu beta
  double ell_acute_abs = 0.0;  // beta_acute / (2 decay) - n - 1/2 at the bound level
  double decay = 0.0;
};

/// Throws BoundStateError when the state is not bound (ell_acute_abs <= 0).
ModelBCore model_b_core(const QuantumState& state, const PhysicalParams& params);

/// ell_acute^2 = (m~ - e b0 beta / 2)^2 + 1/4 - eta E for an arbitrary E.
double model_b_ell_sq(const QuantumState& state, const PhysicalParams& params, double energy);

struct ModelCCore {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double a4 = 0.0;
  std::optional<nu::NUCoefficients> nu;  // empty at delta = 0
  double kappa = 0.0;
  double upsilon = 0.0;
  double eps1t = 0.0;  // sqrt(r1) + delta sqrt(r2)
  double eps2t = 0.0;  // 2 sqrt(r1 r2) + 2 (delta w^2 + delta v2 - e b0 mu w) - v1
};

/// a1..a4 of the Model C radial equation at energy E, the NU coefficients
/// (a1, -a2/delta, a3/delta, a4/delta^2) and the derived kappa, upsilon,
/// eps1t, eps2t.
///
/// At delta = 0 the NU map is undefined: `nu` is left empty and kappa,
/// upsilon are 0, unless `require_nu` is set, in which case DomainError is
/// thrown. Throws BoundStateError when a radicand is negative.
ModelCCore model_c_coefficients(const QuantumState& state, const PhysicalParams& params, double energy,
                                bool require_nu = false);

/// Closed-form spectra. All require sigma = 1.
double model_a_energy(const QuantumState& state, const PhysicalParams& params);
double model_b_energy(const QuantumState& state, const PhysicalParams& params);
double model_c_energy(const QuantumState& state, const PhysicalParams& params);

double closed_form_energy(ModelKind kind, const QuantumState& state, const PhysicalParams& params);

/// closed_form_energy, or empty when the state has no bound level.
std::optional<double> try_closed_form_energy(ModelKind kind, const QuantumState& state,
                                             const PhysicalParams& params);

struct GreeneAldrich {
  double exact = 0.0;    // 1 / rho
  double approx = 0.0;   // delta / (1 - exp(-delta rho))
  double rel_err = 0.0;  // |approx - exact| rho
};
GreeneAldrich greene_aldrich(double rho, double delta);

/// Model C has two closed-form shapes.
enum class WaveForm {
  power,  // rho^((1+upsilon)/2) exp(-delta rho kappa / 2) P_n(1 - 2 exp(-delta rho))
  xi,     // phi(xi) chi(xi) at xi = exp(-delta rho), scaled to agree with `power` as delta rho -> 0
};

/// Normalized bound state: integral of U^2 over (0, inf) is 1 and
/// R = sqrt(g / rho) U.
class Wavefunction {
 public:
  /// Throws like the matching closed-form energy.
  Wavefunction(ModelKind kind, const QuantumState& state, const PhysicalParams& params,
               WaveForm form = WaveForm::power);

  ModelKind kind() const noexcept { return kind_; }
  const QuantumState& state() const noexcept { return state_; }
  double energy() const noexcept { return energy_; }
  double norm() const noexcept { return norm_; }

  /// N * shape(rho). rho >= 0.
  double reduced(double rho) const;
  /// sqrt(g / rho) U(rho). rho > 0.
  double radial(double rho) const;
  /// Unnormalized closed-form U.
  double shape(double rho) const;
  /// Asymptotic decay rate of U.
  double decay() const noexcept { return decay_; }

 private:
  ModelKind kind_;
  QuantumState state_;
  PhysicalParams params_;
  WaveForm form_;
  double energy_ = 0.0;
  double ell_ = 0.0;    // small-rho index of U ~ rho^(ell + 1/2) for A and B
  double decay_ = 0.0;  // decay rate for A and B
  nu::NUCoefficients nu_{};
  double kappa_ = 0.0;
  double upsilon_ = 0.0;
  double norm_ = 1.0;
};

}  // namespace pdm
