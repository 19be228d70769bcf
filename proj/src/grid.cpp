#include "pdm/grid.hpp"

#include <cmath>
#include <string>

#include "pdm/error.hpp"

namespace pdm {

RadialGrid::RadialGrid(double rho_min, double rho_max, std::size_t n_points)
    : rho_min_(rho_min), rho_max_(rho_max), n_(n_points), h_(0.0) {
  if (!std::isfinite(rho_min) || !std::isfinite(rho_max)) throw ValidationError("grid bounds must be finite");
  if (rho_min < 0.0) throw ValidationError("grid rho_min must be >= 0");
  if (!(rho_max > rho_min)) throw ValidationError("grid requires rho_max > rho_min");
  if (n_points < kMinPoints) {
    throw ValidationError("grid needs at least " + std::to_string(kMinPoints) + " points");
  }
  h_ = (rho_max - rho_min) / static_cast<double>(n_points - 1);
}

RadialGrid RadialGrid::dirichlet(double rho_max, std::size_t n_points) {
  if (n_points == 0) throw ValidationError("grid needs at least one point");
  return RadialGrid(rho_max / static_cast<double>(n_points), rho_max, n_points);
}

std::vector<double> RadialGrid::nodes() const {
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)[i];
  return out;
}

RadialFunction::RadialFunction(RadialGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw ValidationError("radial function size does not match its grid");
  for (double v : values_) {
    if (!std::isfinite(v)) throw ValidationError("radial function has non-finite samples");
  }
}

RadialFunction RadialFunction::sample(const RadialGrid& grid, const std::function<double(double)>& f) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = f(grid[i]);
  return RadialFunction(grid, std::move(values));
}

}  // namespace pdm
