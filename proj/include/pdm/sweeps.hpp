#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdm/models.hpp"
#include "pdm/params.hpp"

namespace pdm {

struct SweepSpec {
  ModelKind kind = ModelKind::A;
  std::vector<QuantumState> states;
  Param param = Param::beta;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;
};

/// Throws ValidationError unless lo < hi, steps >= 2, the state list is
/// non-empty and the model's energy depends on the swept parameter.
void validate(const SweepSpec& spec);

/// Parameters each model's closed-form energy depends on.
bool energy_depends_on(ModelKind kind, Param param);

struct SweepRow {
  double value = 0.0;
  QuantumState state;
  std::optional<double> energy;  // empty when the state is not bound at this point
};

/// Closed-form energies on the uniform grid lo..hi (inclusive), ordered by
/// grid point and then by the order of spec.states.
std::vector<SweepRow> sweep(const SweepSpec& spec, const PhysicalParams& params);

struct CrossingPoint {
  double param_value = 0.0;
  double energy = 0.0;
  std::pair<QuantumState, QuantumState> states;
  double bracket_width = 0.0;  // width of the final bisection bracket
};

/// Crossings of E(s1) and E(s2) as `param` runs over [lo, hi].
///
/// The difference is scanned on `scan_steps` points; each sign change between
/// neighbouring points where both states are bound is refined by bisection
/// until the bracket stops shrinking. Differences below 1e-12 max(1, |E|) are
/// treated as zero: they are exact degeneracies, not crossings. Results are
/// ascending in the parameter value.
std::vector<CrossingPoint> find_crossings(ModelKind kind, const QuantumState& s1, const QuantumState& s2, Param param,
                                          double lo, double hi, const PhysicalParams& params,
                                          int scan_steps = 2001);

/// Energy difference E(s1) - E(s2) at one parameter value, if both are bound.
std::optional<double> energy_gap(ModelKind kind, const QuantumState& s1, const QuantumState& s2, Param param,
                                 double value, const PhysicalParams& params);

/// A documented sweep window in which a crossing between two of the states
/// (0,1), (1,0), (2,1), (0,2) is known to occur.
struct CrossingScenario {
  std::string label;
  ModelKind kind = ModelKind::A;
  Param param = Param::beta;
  double lo = 0.0;
  double hi = 1.0;
  ParamValues base;
  QuantumState s1;
  QuantumState s2;
};

/// One scenario per swept parameter and model: beta, b0, alpha_ab and mu for
/// models A and B, delta for model C.
const std::vector<CrossingScenario>& crossing_catalog();

/// The four states the catalog draws from.
const std::vector<QuantumState>& catalog_states();

}  // namespace pdm
