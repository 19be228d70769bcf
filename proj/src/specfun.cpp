#include "pdm/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "pdm/error.hpp"

namespace pdm {

double laguerre(int n, double a, double x) {
  if (n < 0) throw DomainError("laguerre: degree must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * curr - (k + a) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double jacobi(int n, double a, double b, double x) {
  if (n < 0) throw DomainError("jacobi: degree must be >= 0");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("jacobi: parameters must exceed -1");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c0 = 2.0 * (k + 1.0) * (k + a + b + 1.0) * s;
    const double c1 = (s + 1.0) * ((s + 2.0) * s * x + a * a - b * b);
    const double c2 = 2.0 * (k + a) * (k + b) * (s + 2.0);
    const double next = (c1 * curr - c2 * prev) / c0;
    prev = curr;
    curr = next;
  }
  return curr;
}

namespace {

// Simpson over equally spaced samples; odd interval counts end with the 3/8 rule.
double simpson_samples(std::span<const double> y, double h) {
  const std::size_t intervals = y.size() - 1;
  if (intervals == 1) return 0.5 * h * (y[0] + y[1]);
  if (intervals == 2) return h / 3.0 * (y[0] + 4.0 * y[1] + y[2]);
  std::size_t even = intervals % 2 == 0 ? intervals : intervals - 3;
  double sum = y[0] + y[even];
  for (std::size_t i = 1; i < even; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * y[i];
  double total = h / 3.0 * sum;
  if (even != intervals) {
    total += 3.0 * h / 8.0 * (y[even] + 3.0 * y[even + 1] + 3.0 * y[even + 2] + y[even + 3]);
  }
  return total;
}

}  // namespace

double simpson(const RadialFunction& f) {
  return simpson_samples(f.values(), f.grid().spacing());
}

Normalization normalize(const RadialFunction& f) {
  const auto& v = f.values();
  std::vector<double> sq(v.size());
  std::transform(v.begin(), v.end(), sq.begin(), [](double x) { return x * x; });
  const double h = f.grid().spacing();

  const double fine = simpson_samples(sq, h);
  if (!(fine > 0.0) || !std::isfinite(fine)) throw DomainError("normalize: function has zero or non-finite norm");

  // Divergent tail: the last half of the grid split into four chunks whose
  // integrals never decrease and still carry weight at the end.
  const std::size_t n = sq.size();
  const std::size_t chunk = (n / 2) / 4;
  if (chunk >= 2) {
    double previous = -1.0;
    bool growing = true;
    double last = 0.0;
    for (std::size_t c = 0; c < 4; ++c) {
      const std::size_t begin = n - 1 - (4 - c) * chunk;
      last = simpson_samples(std::span<const double>(sq).subspan(begin, chunk + 1), h);
      if (last < previous) growing = false;
      previous = last;
    }
    if (growing && last > 1e-6 * fine) {
      throw DomainError("normalize: tail partial integrals keep growing; sample is not square integrable");
    }
  }

  // Coarse pass over every other node with the same end point.
  std::vector<double> coarse;
  coarse.reserve(n / 2 + 1);
  const std::size_t start = (n - 1) % 2;  // keep the last node
  double head = 0.0;
  if (start == 1) head = 0.5 * h * (sq[0] + sq[1]);
  for (std::size_t i = start; i < n; i += 2) coarse.push_back(sq[i]);
  const double coarse_integral = coarse.size() >= 2 ? head + simpson_samples(coarse, 2.0 * h) : fine;

  return {1.0 / std::sqrt(fine), std::abs(fine - coarse_integral) / fine};
}

}  // namespace pdm
