#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace pdm {

/// Names of the scalar inputs of a scenario. The string form of each name is
/// the key used in config files.
enum class Param { e, b0, mu, beta, sigma, alpha_ab, kz, eta, delta, v0, v1, v2 };

inline constexpr std::array<Param, 12> kAllParams = {
    Param::e,     Param::b0,       Param::mu, Param::beta, Param::sigma, Param::alpha_ab,
    Param::kz,    Param::eta,      Param::delta, Param::v0, Param::v1,   Param::v2};

std::string_view param_name(Param p);
std::optional<Param> parse_param(std::string_view name);

/// Raw scenario values in hbar = 2 m0 = 1 units.
struct ParamValues {
  double e = 1.0;         // charge, +-|e|
  double b0 = 0.0;        // field strength
  double mu = 0.0;        // field shape; mu = 0 switches the field off
  double beta = 0.0;      // offset in the generating function S(rho)
  double sigma = 1.0;     // inverse-power exponent of the field
  double alpha_ab = 0.0;  // Aharonov-Bohm flux in units of the flux quantum 2 pi / e
  double kz = 0.0;        // axial wavenumber
  double eta = 1.0;       // mass scale
  double delta = 0.0;     // mass / Yukawa decay rate
  double v0 = 0.0;        // Yukawa strength
  double v1 = 0.0;        // Coulomb part of the Kratzer term
  double v2 = 0.0;        // inverse-square part of the Kratzer term

  double get(Param p) const;
  void set(Param p, double value);
};

/// Validated, immutable parameter set.
///
/// Construction rejects non-finite values, e = 0, b0 < 0, eta <= 0 and
/// delta < 0. A vanishing magnetic gap kz^2 + e^2 b0^2 mu^2 is not rejected
/// (Model C can still bind through its potential) but is flagged via
/// has_magnetic_gap().
class PhysicalParams {
 public:
  PhysicalParams() : PhysicalParams(ParamValues{}) {}
  explicit PhysicalParams(const ParamValues& values);

  double e() const noexcept { return v_.e; }
  double b0() const noexcept { return v_.b0; }
  double mu() const noexcept { return v_.mu; }
  double beta() const noexcept { return v_.beta; }
  double sigma() const noexcept { return v_.sigma; }
  double alpha_ab() const noexcept { return v_.alpha_ab; }
  double kz() const noexcept { return v_.kz; }
  double eta() const noexcept { return v_.eta; }
  double delta() const noexcept { return v_.delta; }
  double v0() const noexcept { return v_.v0; }
  double v1() const noexcept { return v_.v1; }
  double v2() const noexcept { return v_.v2; }

  const ParamValues& values() const noexcept { return v_; }
  double get(Param p) const { return v_.get(p); }

  /// Copy with one parameter replaced; the result is validated again.
  PhysicalParams with(Param p, double value) const;

  /// kz^2 + e^2 b0^2 mu^2, the squared decay rate of the Coulomb-type models.
  double magnetic_gap_sq() const noexcept;
  bool has_magnetic_gap() const noexcept { return magnetic_gap_sq() > 0.0; }

 private:
  ParamValues v_;
};

struct QuantumState {
  int n_rho = 0;
  int m = 0;

  friend bool operator==(const QuantumState&, const QuantumState&) = default;
};

/// Throws ValidationError when n_rho < 0.
void validate(const QuantumState& state);

/// m - alpha: the magnetic quantum number shifted by the flux.
double m_tilde(const QuantumState& state, const PhysicalParams& params);

/// -(kz^2 + e^2 b0^2 mu^2); never positive.
double e_tilde(const PhysicalParams& params);

}  // namespace pdm
