#include "pdm/params.hpp"

#include <cmath>
#include <string>

#include "pdm/error.hpp"

namespace pdm {

namespace {

constexpr std::array<std::string_view, 12> kNames = {
    "e", "b0", "mu", "beta", "sigma", "alpha_ab", "kz", "eta", "delta", "v0", "v1", "v2"};

}  // namespace

std::string_view param_name(Param p) { return kNames[static_cast<std::size_t>(p)]; }

std::optional<Param> parse_param(std::string_view name) {
  for (Param p : kAllParams) {
    if (param_name(p) == name) return p;
  }
  // common spelling used on the command line
  if (name == "alpha") return Param::alpha_ab;
  return std::nullopt;
}

double ParamValues::get(Param p) const {
  switch (p) {
    case Param::e: return e;
    case Param::b0: return b0;
    case Param::mu: return mu;
    case Param::beta: return beta;
    case Param::sigma: return sigma;
    case Param::alpha_ab: return alpha_ab;
    case Param::kz: return kz;
    case Param::eta: return eta;
    case Param::delta: return delta;
    case Param::v0: return v0;
    case Param::v1: return v1;
    case Param::v2: return v2;
  }
  return 0.0;
}

void ParamValues::set(Param p, double value) {
  switch (p) {
    case Param::e: e = value; break;
    case Param::b0: b0 = value; break;
    case Param::mu: mu = value; break;
    case Param::beta: beta = value; break;
    case Param::sigma: sigma = value; break;
    case Param::alpha_ab: alpha_ab = value; break;
    case Param::kz: kz = value; break;
    case Param::eta: eta = value; break;
    case Param::delta: delta = value; break;
    case Param::v0: v0 = value; break;
    case Param::v1: v1 = value; break;
    case Param::v2: v2 = value; break;
  }
}

PhysicalParams::PhysicalParams(const ParamValues& values) : v_(values) {
  for (Param p : kAllParams) {
    if (!std::isfinite(v_.get(p))) {
      throw ValidationError("parameter '" + std::string(param_name(p)) + "' is not finite");
    }
  }
  if (v_.e == 0.0) throw ValidationError("charge e must be nonzero");
  if (v_.b0 < 0.0) throw ValidationError("b0 must be >= 0");
  if (v_.eta <= 0.0) throw ValidationError("eta must be > 0 (mass must stay positive)");
  if (v_.delta < 0.0) throw ValidationError("delta must be >= 0");
}

PhysicalParams PhysicalParams::with(Param p, double value) const {
  ParamValues next = v_;
  next.set(p, value);
  return PhysicalParams(next);
}

double PhysicalParams::magnetic_gap_sq() const noexcept {
  const double field = v_.e * v_.b0 * v_.mu;
  return v_.kz * v_.kz + field * field;
}

void validate(const QuantumState& state) {
  if (state.n_rho < 0) throw ValidationError("n_rho must be >= 0");
}

double m_tilde(const QuantumState& state, const PhysicalParams& params) {
  return static_cast<double>(state.m) - params.alpha_ab();
}

double e_tilde(const PhysicalParams& params) { return -params.magnetic_gap_sq(); }

}  // namespace pdm
