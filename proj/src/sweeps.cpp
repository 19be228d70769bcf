#include "pdm/sweeps.hpp"

#include <algorithm>
#include <cmath>

#include "pdm/error.hpp"

namespace pdm {

namespace {

double grid_value(double lo, double hi, int steps, int i) {
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

bool sweepable(Param p) {
  return p == Param::beta || p == Param::b0 || p == Param::alpha_ab || p == Param::mu || p == Param::delta;
}

struct GapSample {
  double value = 0.0;
  std::optional<double> gap;
  double energy = 0.0;  // E(s1), for the noise floor
};

GapSample sample_gap(ModelKind kind, const QuantumState& s1, const QuantumState& s2, Param param, double value,
                     const PhysicalParams& params) {
  const PhysicalParams p = params.with(param, value);
  const auto e1 = try_closed_form_energy(kind, s1, p);
  const auto e2 = try_closed_form_energy(kind, s2, p);
  if (!e1 || !e2) return {value, std::nullopt, 0.0};
  return {value, *e1 - *e2, *e1};
}

// -1, 0 or +1, with differences under the rounding floor counted as 0.
int gap_sign(const GapSample& s) {
  const double floor = 1e-12 * std::max(1.0, std::abs(s.energy));
  if (std::abs(*s.gap) <= floor) return 0;
  return *s.gap > 0.0 ? 1 : -1;
}

ParamValues base_values() {
  ParamValues v;
  v.e = 1.0;
  v.b0 = 1.0;
  v.mu = 1.0;
  v.beta = 0.0;
  v.kz = 0.0;
  v.eta = 1.0;
  v.alpha_ab = 0.0;
  return v;
}

ParamValues with(ParamValues v, std::initializer_list<std::pair<Param, double>> changes) {
  for (const auto& [p, x] : changes) v.set(p, x);
  return v;
}

}  // namespace

bool energy_depends_on(ModelKind kind, Param param) {
  if (!sweepable(param)) return false;
  return param != Param::delta || kind == ModelKind::C;
}

void validate(const SweepSpec& spec) {
  if (!(spec.lo < spec.hi)) throw ValidationError("sweep range requires lo < hi");
  if (spec.steps < 2) throw ValidationError("sweep requires at least 2 steps");
  if (spec.states.empty()) throw ValidationError("sweep requires at least one state");
  if (!sweepable(spec.param)) {
    throw ValidationError("sweep parameter must be one of beta, b0, alpha_ab, mu, delta");
  }
  if (!energy_depends_on(spec.kind, spec.param)) {
    throw ValidationError("model " + std::string(model_name(spec.kind)) + " energy does not depend on " +
                          std::string(param_name(spec.param)));
  }
  for (const auto& s : spec.states) validate(s);
}

std::vector<SweepRow> sweep(const SweepSpec& spec, const PhysicalParams& params) {
  validate(spec);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.steps) * spec.states.size());
  for (int i = 0; i < spec.steps; ++i) {
    const double value = grid_value(spec.lo, spec.hi, spec.steps, i);
    const PhysicalParams p = params.with(spec.param, value);
    for (const auto& s : spec.states) rows.push_back({value, s, try_closed_form_energy(spec.kind, s, p)});
  }
  return rows;
}

std::optional<double> energy_gap(ModelKind kind, const QuantumState& s1, const QuantumState& s2, Param param,
                                 double value, const PhysicalParams& params) {
  return sample_gap(kind, s1, s2, param, value, params).gap;
}

std::vector<CrossingPoint> find_crossings(ModelKind kind, const QuantumState& s1, const QuantumState& s2, Param param,
                                          double lo, double hi, const PhysicalParams& params, int scan_steps) {
  if (s1 == s2) throw ValidationError("find_crossings needs two different states");
  SweepSpec spec{kind, {s1, s2}, param, lo, hi, scan_steps};
  validate(spec);

  std::vector<CrossingPoint> out;
  std::optional<GapSample> last;  // last bound point with a nonzero gap
  int last_index = -1;
  for (int i = 0; i < scan_steps; ++i) {
    const GapSample cur = sample_gap(kind, s1, s2, param, grid_value(lo, hi, scan_steps, i), params);
    if (!cur.gap) {
      last.reset();
      continue;
    }
    const int sign = gap_sign(cur);
    if (sign == 0) continue;
    // A run of exact zeros in between marks a degenerate stretch, not a crossing.
    if (last && gap_sign(*last) != sign && i - last_index <= 2) {
      GapSample a = *last;
      GapSample b = cur;
      bool valid = true;
      std::optional<GapSample> hit;
      while (true) {
        const double mid = 0.5 * (a.value + b.value);
        if (mid <= a.value || mid >= b.value) break;
        const GapSample m = sample_gap(kind, s1, s2, param, mid, params);
        if (!m.gap) {
          valid = false;
          break;
        }
        const int ms = gap_sign(m);
        if (ms == 0) {
          hit = m;
          break;
        }
        if (ms == gap_sign(a)) {
          a = m;
        } else {
          b = m;
        }
      }
      if (valid) {
        const GapSample& best = hit ? *hit : (std::abs(*a.gap) <= std::abs(*b.gap) ? a : b);
        out.push_back({best.value, best.energy, {s1, s2}, hit ? 0.0 : b.value - a.value});
      }
    }
    last = cur;
    last_index = i;
  }
  std::sort(out.begin(), out.end(),
            [](const CrossingPoint& x, const CrossingPoint& y) { return x.param_value < y.param_value; });
  return out;
}

const std::vector<QuantumState>& catalog_states() {
  static const std::vector<QuantumState> states{{0, 1}, {1, 0}, {2, 1}, {0, 2}};
  return states;
}

const std::vector<CrossingScenario>& crossing_catalog() {
  static const std::vector<CrossingScenario> catalog = [] {
    const ParamValues base = base_values();
    ParamValues fig_c = base;
    fig_c.e = -1.0;
    fig_c.beta = -0.5;
    fig_c.kz = 1.0;
    fig_c.v0 = 1.0;
    fig_c.v1 = 0.5;
    fig_c.v2 = 0.5;
    return std::vector<CrossingScenario>{
        {"A-beta", ModelKind::A, Param::beta, -3.0, 3.0, base, {1, 0}, {2, 1}},
        {"A-b0", ModelKind::A, Param::b0, 0.1, 3.0, with(base, {{Param::kz, 0.5}}), {1, 0}, {0, 2}},
        {"A-alpha", ModelKind::A, Param::alpha_ab, -2.0, 2.0, with(base, {{Param::kz, 0.5}}), {0, 1}, {0, 2}},
        {"A-mu", ModelKind::A, Param::mu, 0.1, 3.0, with(base, {{Param::kz, 0.5}}), {1, 0}, {0, 2}},
        {"B-beta", ModelKind::B, Param::beta, -6.0, 3.0, base, {1, 0}, {0, 2}},
        {"B-b0", ModelKind::B, Param::b0, 0.1, 4.0,
         with(base, {{Param::beta, -1.0}, {Param::alpha_ab, -0.5}}), {1, 0}, {0, 2}},
        {"B-alpha", ModelKind::B, Param::alpha_ab, -3.0, 3.0, with(base, {{Param::kz, 0.5}}), {0, 1}, {1, 0}},
        {"B-mu", ModelKind::B, Param::mu, 0.1, 4.0,
         with(base, {{Param::beta, -1.0}, {Param::kz, 0.5}, {Param::alpha_ab, -1.0}, {Param::b0, 2.0}}), {0, 1},
         {1, 0}},
        {"C-delta", ModelKind::C, Param::delta, 0.01, 0.5, fig_c, {0, 1}, {1, 0}},
    };
  }();
  return catalog;
}

}  // namespace pdm
