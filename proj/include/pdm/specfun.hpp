#pragma once

#include "pdm/grid.hpp"

namespace pdm {

/// Generalized Laguerre polynomial L_n^a(x) by forward three-term recurrence.
double laguerre(int n, double a, double x);

/// Jacobi polynomial P_n^(a,b)(x) by forward three-term recurrence.
/// Requires a, b > -1; x is not range-checked (the polynomial is entire).
double jacobi(int n, double a, double b, double x);

struct Normalization {
  double factor = 0.0;     // N with integral |N f|^2 = 1
  double rel_error = 0.0;  // |I_h - I_2h| / I_h from grid halving
};

/// Composite Simpson integral of the sampled values (3/8 rule on the last
/// three intervals when the interval count is odd).
double simpson(const RadialFunction& f);

/// Normalization constant of a sampled radial function in the flat measure.
///
/// Throws DomainError when the samples are not square integrable on the grid:
/// an all-zero function, or a tail whose partial integrals keep growing up to
/// the end of the grid.
Normalization normalize(const RadialFunction& f);

}  // namespace pdm
