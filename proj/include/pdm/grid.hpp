#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace pdm {

/// Uniform radial grid rho_i = rho_min + i h, i = 0 .. n_points - 1.
///
/// rho_min may be 0 so that quadrature can cover the origin; solvers that
/// evaluate singular potentials reject such grids themselves.
class RadialGrid {
 public:
  static constexpr std::size_t kMinPoints = 100;

  RadialGrid(double rho_min, double rho_max, std::size_t n_points);

  /// Grid for a Dirichlet problem on (0, rho_max]: the first node sits one
  /// spacing off the origin, so the left ghost node is rho = 0.
  static RadialGrid dirichlet(double rho_max, std::size_t n_points);

  double rho_min() const noexcept { return rho_min_; }
  double rho_max() const noexcept { return rho_max_; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return h_; }
  double operator[](std::size_t i) const noexcept {
    return i + 1 == n_ ? rho_max_ : rho_min_ + static_cast<double>(i) * h_;
  }
  std::vector<double> nodes() const;

 private:
  double rho_min_;
  double rho_max_;
  std::size_t n_;
  double h_;
};

/// Values sampled on a RadialGrid. All values are finite.
class RadialFunction {
 public:
  RadialFunction(RadialGrid grid, std::vector<double> values);

  static RadialFunction sample(const RadialGrid& grid, const std::function<double(double)>& f);

  const RadialGrid& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  RadialGrid grid_;
  std::vector<double> values_;
};

}  // namespace pdm
