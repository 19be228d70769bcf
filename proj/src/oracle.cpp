#include "pdm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdm/error.hpp"

namespace pdm {

namespace {

// Number of negative pivots in the LDL^T factorization of the symmetric
// tridiagonal matrix with diagonal d(i) and constant off-diagonal `off`.
template <class Diagonal>
int negative_pivots(std::size_t n, Diagonal&& d, double off) {
  const double off_sq = off * off;
  int count = 0;
  double u = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    u = d(i) - (i == 0 ? 0.0 : off_sq / u);
    if (u == 0.0) u = -std::numeric_limits<double>::min();
    if (u < 0.0) ++count;
  }
  return count;
}

std::vector<double> sample_potential(const Potential& potential, const RadialGrid& grid) {
  std::vector<double> w(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    w[i] = potential(grid[i]);
    if (!std::isfinite(w[i])) throw DomainError("potential is not finite on the grid");
  }
  return w;
}

std::vector<double> uniform_eigenvalues(const std::vector<double>& w, double h, int count) {
  const double diag = 2.0 / (h * h);
  const double off = -1.0 / (h * h);
  const auto [wmin, wmax] = std::minmax_element(w.begin(), w.end());
  const std::size_t n = w.size();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    double lo = *wmin;
    double hi = *wmax + 4.0 / (h * h);
    while (true) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const int below = negative_pivots(n, [&](std::size_t i) { return diag + w[i] - mid; }, off);
      if (below > k) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

// Nested grid with half the spacing and the same Dirichlet ghost positions.
RadialGrid refined(const RadialGrid& grid) {
  const double h = grid.spacing();
  return RadialGrid(grid.rho_min() - 0.5 * h, grid.rho_max() + 0.5 * h, 2 * grid.size());
}

const std::vector<double>& stencil(int order) {
  static const std::vector<double> s2{1.0, -2.0, 1.0};
  static const std::vector<double> s4{-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12};
  static const std::vector<double> s6{1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90};
  static const std::vector<double> s8{-1.0 / 560, 8.0 / 315, -1.0 / 5,    8.0 / 5,   -205.0 / 72,
                                      8.0 / 5,    -1.0 / 5,   8.0 / 315, -1.0 / 560};
  switch (order) {
    case 2: return s2;
    case 4: return s4;
    case 6: return s6;
    case 8: return s8;
    default: throw ValidationError("residual stencil order must be 2, 4, 6 or 8");
  }
}

// ---- mapped solver -------------------------------------------------------

// rho(x) for x = ln t + t, t = rho / b, by Newton iteration on u = ln t.
double mapped_rho(double x, double b) {
  double u = x < 1.0 ? x : std::log(x);
  for (int it = 0; it < 100; ++it) {
    const double eu = std::exp(u);
    const double step = (u + eu - x) / (1.0 + eu);
    u -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(u))) break;
  }
  return b * std::exp(u);
}

double oracle_mass(double rho, ModelKind kind, const PhysicalParams& params, ModelForm form) {
  if (kind == ModelKind::C && form == ModelForm::greene_aldrich) return mass_function_ga(rho, params);
  return mass_function(rho, kind, params);
}

// Decay rate of U at infinity: sqrt(W(inf) - e_tilde).
double tail_decay(ModelKind kind, const QuantumState& state, const PhysicalParams& params, ModelForm form) {
  double sq = params.magnetic_gap_sq();
  if (kind == ModelKind::C) {
    const double d = params.delta();
    if (form == ModelForm::greene_aldrich) {
      const ModelCCore c = model_c_coefficients(state, params, 0.0);
      sq = d * d * c.a1 + d * c.a2 + c.a4;
    } else {
      sq += d * d / 16.0;
    }
  }
  if (!(sq > 0.0)) throw BoundStateError("no bound states: the potential does not exceed e_tilde at infinity", sq);
  return std::sqrt(sq);
}

// Liouville form -v'' + (p^2 W + S) v = e_tilde p^2 v on a uniform x grid,
// stored so that the E dependence is a single vector: p^2 W = base - E coupling.
struct MappedProblem {
  std::vector<double> base;      // p^2 W(E = 0) + S
  std::vector<double> coupling;  // p^2 g
  std::vector<double> metric;    // p^2
  double dx = 0.0;
  int n_rho = 0;
  double target = 0.0;

  int count_below(double s, double energy) const {
    const double diag = 2.0 / (dx * dx);
    return negative_pivots(
        base.size(), [&](std::size_t i) { return diag + base[i] - energy * coupling[i] - s * metric[i]; },
        -1.0 / (dx * dx));
  }

  // True when the n_rho-th eigenvalue lies below the target (F(E) < 0).
  bool overbound(double energy) const { return count_below(target, energy) > n_rho; }

  double eigenvalue(double energy) const {
    double lo = target - 1.0;
    double hi = target + 1.0;
    for (int i = 0; count_below(lo, energy) > n_rho && i < 2000; ++i) lo -= 2.0 * (target - lo);
    for (int i = 0; count_below(hi, energy) <= n_rho && i < 2000; ++i) hi += 2.0 * (hi - target);
    while (true) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (count_below(mid, energy) > n_rho) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return 0.5 * (lo + hi);
  }
};

// Effective small-rho index ell with U ~ rho^(ell + 1/2), from rho^2 W near 0.
double small_rho_index(ModelKind kind, const QuantumState& state, const PhysicalParams& params, ModelForm form,
                       double energy, double scale) {
  const double rho = 1e-10 * scale;
  const double l2 = rho * rho * oracle_potential(rho, kind, state, params, energy, form) + 0.25;
  return std::sqrt(std::max(l2, 0.0));
}

MappedProblem build_problem(ModelKind kind, const QuantumState& state, const PhysicalParams& params, ModelForm form,
                            double decay, double ell, std::size_t intervals) {
  const double b = 0.5 / decay;
  const double ell_eff = std::max(ell, 0.04);
  const double x_min = std::max(-300.0, -12.0 / ell_eff);
  const double t_max = 2.0 * (30.0 + 3.0 * (state.n_rho + ell));  // rho_max * decay = t_max / 2
  const double x_max = std::log(t_max) + t_max;

  MappedProblem p;
  p.dx = (x_max - x_min) / static_cast<double>(intervals);
  p.n_rho = state.n_rho;
  p.target = e_tilde(params);
  const std::size_t n = intervals - 1;
  p.base.resize(n);
  p.coupling.resize(n);
  p.metric.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = x_min + static_cast<double>(i + 1) * p.dx;
    const double rho = mapped_rho(x, b);
    const double t = rho / b;
    const double dr = rho / (1.0 + t);  // drho/dx
    const double m = dr * dr;
    const double liouville = (0.25 + t) / std::pow(1.0 + t, 4);
    p.metric[i] = m;
    p.coupling[i] = m * oracle_mass(rho, kind, params, form);
    p.base[i] = m * oracle_potential(rho, kind, state, params, 0.0, form) + liouville;
  }
  return p;
}

EnergyBracket grow_bracket(const MappedProblem& p) {
  double lo = -1.0;
  double hi = 1.0;
  for (int i = 0; p.overbound(lo); ++i) {
    if (i > 200) throw BracketError("no lower energy bound found", -1.0, -1.0);
    lo *= 2.0;
  }
  for (int i = 0; !p.overbound(hi); ++i) {
    if (i > 200) throw BracketError("no upper energy bound found", 1.0, 1.0);
    hi *= 2.0;
  }
  return {lo, hi};
}

double solve_energy(const MappedProblem& p, EnergyBracket br) {
  if (p.overbound(br.lo) || !p.overbound(br.hi)) {
    throw BracketError("oracle mismatch has no sign change in [" + std::to_string(br.lo) + ", " +
                           std::to_string(br.hi) + "]",
                       p.eigenvalue(br.lo) - p.target, p.eigenvalue(br.hi) - p.target);
  }
  double lo = br.lo;
  double hi = br.hi;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (p.overbound(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void require_oracle_inputs(ModelKind kind, const QuantumState& state, const PhysicalParams& params,
                           const OracleOptions& options) {
  validate(state);
  if (options.intervals < 100) throw ValidationError("oracle needs at least 100 intervals");
  if (kind == ModelKind::C && options.form == ModelForm::greene_aldrich && !(params.delta() > 0.0)) {
    throw DomainError("Greene-Aldrich form requires delta > 0");
  }
}

}  // namespace

FdResult fd_eigenvalues(const Potential& potential, const RadialGrid& grid, int count, const FdOptions& options) {
  if (count < 1) throw ValidationError("fd_eigenvalues: count must be >= 1");
  if (static_cast<std::size_t>(count) > grid.size()) throw ValidationError("fd_eigenvalues: count exceeds grid size");
  FdResult result;
  result.values = uniform_eigenvalues(sample_potential(potential, grid), grid.spacing(), count);
  if (options.check_accuracy) {
    const RadialGrid fine = refined(grid);
    const std::vector<double> ref = uniform_eigenvalues(sample_potential(potential, fine), fine.spacing(), count);
    double shift = 0.0;
    for (int k = 0; k < count; ++k) {
      const double a = result.values[static_cast<std::size_t>(k)];
      shift = std::max(shift, std::abs(a - ref[static_cast<std::size_t>(k)]) / std::max(1.0, std::abs(a)));
    }
    result.max_shift = shift;
    result.accurate = shift <= options.tolerance;
  }
  return result;
}

RadialFunction fd_eigenvector(const Potential& potential, const RadialGrid& grid, double eigenvalue) {
  const std::vector<double> w = sample_potential(potential, grid);
  const double h = grid.spacing();
  const double off = -1.0 / (h * h);
  const std::size_t n = w.size();
  std::vector<double> v(n, 1.0);
  std::vector<double> c(n);
  std::vector<double> y(n);
  for (int iter = 0; iter < 4; ++iter) {
    // Thomas solve of (T - eigenvalue) y = v.
    double pivot = 2.0 / (h * h) + w[0] - eigenvalue;
    if (pivot == 0.0) pivot = std::numeric_limits<double>::epsilon() / (h * h);
    c[0] = off / pivot;
    y[0] = v[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
      pivot = 2.0 / (h * h) + w[i] - eigenvalue - off * c[i - 1];
      if (pivot == 0.0) pivot = std::numeric_limits<double>::epsilon() / (h * h);
      c[i] = off / pivot;
      y[i] = (v[i] - off * y[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) y[i] -= c[i] * y[i + 1];
    double scale = 0.0;
    for (double x : y) scale = std::max(scale, std::abs(x));
    for (std::size_t i = 0; i < n; ++i) v[i] = y[i] / scale;
  }
  const auto first = std::find_if(v.begin(), v.end(), [](double x) { return std::abs(x) > 1e-8; });
  if (first != v.end() && *first < 0.0) {
    for (double& x : v) x = -x;
  }
  return RadialFunction(grid, std::move(v));
}

double residual(const RadialFunction& f, const Potential& potential, double target, int order) {
  const std::vector<double>& s = stencil(order);
  const std::size_t half = s.size() / 2;
  const RadialGrid& grid = f.grid();
  const double h2 = grid.spacing() * grid.spacing();
  double scale = 0.0;
  for (double x : f.values()) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) throw DomainError("residual of an identically zero function");
  double worst = 0.0;
  for (std::size_t i = half; i + half < f.size(); ++i) {
    double d2 = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) d2 += s[k] * f[i - half + k];
    d2 /= h2;
    const double r = -d2 + (potential(grid[i]) - target) * f[i];
    worst = std::max(worst, std::abs(r));
  }
  return worst / scale;
}

int node_count(const RadialFunction& f) {
  double scale = 0.0;
  for (double x : f.values()) scale = std::max(scale, std::abs(x));
  const double floor = 1e-12 * scale;
  int nodes = 0;
  int last_sign = 0;
  for (double x : f.values()) {
    if (std::abs(x) <= floor) continue;
    const int sign = x > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++nodes;
    last_sign = sign;
  }
  return nodes;
}

double oracle_potential(double rho, ModelKind kind, const QuantumState& state, const PhysicalParams& params,
                        double energy, ModelForm form) {
  if (kind == ModelKind::C && form == ModelForm::greene_aldrich) {
    return effective_potential_ga(rho, state, params, energy);
  }
  return effective_potential(rho, kind, state, params, energy);
}

OracleResult oracle_solve(ModelKind kind, const QuantumState& state, const PhysicalParams& params,
                          std::optional<EnergyBracket> bracket, const OracleOptions& options) {
  require_oracle_inputs(kind, state, params, options);
  const ModelForm form = options.form;
  const double decay = tail_decay(kind, state, params, form);
  const double b = 0.5 / decay;

  // First pass on a provisional grid locates the level; the small-rho index at
  // that energy then sets how far toward the origin the final grids reach.
  const MappedProblem provisional = build_problem(kind, state, params, form, decay, 0.5, options.intervals);
  const EnergyBracket br = bracket ? *bracket : grow_bracket(provisional);
  const double first = solve_energy(provisional, br);
  const double ell = small_rho_index(kind, state, params, form, first, b);

  const MappedProblem coarse = build_problem(kind, state, params, form, decay, ell, options.intervals);
  const MappedProblem fine = build_problem(kind, state, params, form, decay, ell, 2 * options.intervals);
  OracleResult r;
  r.coarse = solve_energy(coarse, br);
  r.fine = solve_energy(fine, br);
  r.energy = (4.0 * r.fine - r.coarse) / 3.0;
  return r;
}

double oracle_energy(ModelKind kind, const QuantumState& state, const PhysicalParams& params,
                     std::optional<EnergyBracket> bracket, const OracleOptions& options) {
  return oracle_solve(kind, state, params, bracket, options).energy;
}

double oracle_mismatch(ModelKind kind, const QuantumState& state, const PhysicalParams& params, double energy,
                       const OracleOptions& options) {
  require_oracle_inputs(kind, state, params, options);
  const double decay = tail_decay(kind, state, params, options.form);
  const double ell = small_rho_index(kind, state, params, options.form, energy, 0.5 / decay);
  const MappedProblem p = build_problem(kind, state, params, options.form, decay, ell, options.intervals);
  return p.eigenvalue(energy) - p.target;
}

VerifyRow verify_state(ModelKind kind, const QuantumState& state, const PhysicalParams& params,
                       const VerifyOptions& options) {
  VerifyRow row;
  row.state = state;
  const Wavefunction wf(kind, state, params, WaveForm::xi);
  row.closed = wf.energy();
  OracleOptions oracle = options.oracle;
  if (kind == ModelKind::C) oracle.form = ModelForm::greene_aldrich;
  row.oracle = oracle_energy(kind, state, params, std::nullopt, oracle);
  row.rel_diff = std::abs(row.oracle - row.closed) / std::max(std::abs(row.closed), 1e-300);

  const RadialGrid check(0.05, 30.0, 20001);
  const RadialFunction u = RadialFunction::sample(check, [&](double rho) { return wf.reduced(rho); });
  const double energy = row.closed;
  row.residual = residual(
      u, [&](double rho) { return oracle_potential(rho, kind, state, params, energy, oracle.form); },
      e_tilde(params), 8);

  const double reach = (30.0 + 3.0 * (state.n_rho + 4.0)) / wf.decay();
  const RadialFunction full =
      RadialFunction::sample(RadialGrid(0.0, reach, 20001), [&](double rho) { return wf.reduced(rho); });
  row.nodes = node_count(full);
  row.ok = row.rel_diff <= options.energy_tolerance && row.residual <= options.residual_tolerance &&
           row.nodes == state.n_rho;
  return row;
}

}  // namespace pdm
