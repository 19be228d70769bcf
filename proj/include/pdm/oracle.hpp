#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdm/grid.hpp"
#include "pdm/models.hpp"

namespace pdm {

using Potential = std::function<double(double)>;

struct FdOptions {
  bool check_accuracy = false;  // also solve on a grid with half the spacing
  double tolerance = 1e-6;      // relative eigenvalue shift that triggers the warning
};

struct FdResult {
  std::vector<double> values;       // lowest eigenvalues, ascending
  std::optional<double> max_shift;  // relative shift against the refined grid, when checked
  bool accurate = true;             // false when max_shift exceeds the tolerance
};

/// Lowest `count` eigenvalues of -U'' + W U = E U with U = 0 one spacing beyond
/// each end of the grid, using the three-point Laplacian and Sturm-count
/// bisection. W must be finite at every node.
FdResult fd_eigenvalues(const Potential& potential, const RadialGrid& grid, int count, const FdOptions& options = {});

/// Eigenvector of the same discretization for a computed eigenvalue, by
/// inverse iteration; normalized to unit max norm with a positive first lobe.
RadialFunction fd_eigenvector(const Potential& potential, const RadialGrid& grid, double eigenvalue);

/// max |-U'' + (W - target) U| / max |U| over the nodes that carry a full
/// central stencil of the given order (2, 4, 6 or 8).
double residual(const RadialFunction& f, const Potential& potential, double target, int order = 2);

/// Strict sign changes, ignoring samples with |f| <= 1e-12 max |f|.
int node_count(const RadialFunction& f);

/// Bracket in E that does not straddle a root of the oracle mismatch.
class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& what, double f_lo, double f_hi)
      : std::runtime_error(what), f_lo_(f_lo), f_hi_(f_hi) {}
  double f_lo() const noexcept { return f_lo_; }
  double f_hi() const noexcept { return f_hi_; }

 private:
  double f_lo_;
  double f_hi_;
};

struct OracleOptions {
  ModelForm form = ModelForm::greene_aldrich;  // Model C only
  std::size_t intervals = 2000;                // coarse grid; the fine grid doubles it
};

struct EnergyBracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct OracleResult {
  double energy = 0.0;  // Richardson-extrapolated
  double coarse = 0.0;  // root on the coarse grid
  double fine = 0.0;    // root on the fine grid
};

/// Solves for the energy E at which the n_rho-th eigenvalue of
/// -U'' + W(rho; E) U = e_tilde U equals e_tilde(params).
///
/// The radial axis is mapped to x = ln(rho/b) + rho/b so that both the
/// small-rho power law and the exponential tail are resolved; the Liouville
/// form of the equation is discretized with the three-point stencil, and the
/// root in E is found by bisection on Sturm counts. Roots on two grids are
/// combined by Richardson extrapolation.
///
/// Without a bracket one is grown geometrically from [-1, 1]. Throws
/// BracketError when the mismatch has no sign change, and BoundStateError
/// when the tail has no decay (e_tilde >= the potential at infinity).
OracleResult oracle_solve(ModelKind kind, const QuantumState& state, const PhysicalParams& params,
                          std::optional<EnergyBracket> bracket = std::nullopt, const OracleOptions& options = {});

double oracle_energy(ModelKind kind, const QuantumState& state, const PhysicalParams& params,
                     std::optional<EnergyBracket> bracket = std::nullopt, const OracleOptions& options = {});

/// F(E) = (n_rho-th numerical eigenvalue at E) - e_tilde on the coarse grid.
/// Decreasing in E.
double oracle_mismatch(ModelKind kind, const QuantumState& state, const PhysicalParams& params, double energy,
                       const OracleOptions& options = {});

/// W(rho; E) of the equation the oracle solves: effective_potential, or its
/// Greene-Aldrich form for Model C when requested.
double oracle_potential(double rho, ModelKind kind, const QuantumState& state, const PhysicalParams& params,
                        double energy, ModelForm form);

struct VerifyRow {
  QuantumState state;
  double closed = 0.0;
  double oracle = 0.0;
  double rel_diff = 0.0;
  double residual = 0.0;
  int nodes = 0;
  bool ok = false;
};

struct VerifyOptions {
  double energy_tolerance = 1e-5;    // relative
  double residual_tolerance = 1e-6;  // max norm on [0.05, 30]
  OracleOptions oracle{};
};

/// Closed form against the oracle for one state, plus the closed-form
/// wavefunction's residual on [0.05, 30] (8th-order stencil, 20001 points)
/// and its node count.
VerifyRow verify_state(ModelKind kind, const QuantumState& state, const PhysicalParams& params,
                       const VerifyOptions& options = {});

}  // namespace pdm
