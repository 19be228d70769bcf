#include <doctest.h>

#include <cmath>
#include <vector>

#include "pdm/error.hpp"
#include "pdm/models.hpp"
#include "pdm/specfun.hpp"
#include "support.hpp"

using namespace pdm;

namespace {

// n-th derivative by the central difference formula with step h.
template <class F>
double nth_derivative(F f, int n, double x, double h) {
  double sum = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    sum += (k % 2 == 0 ? 1.0 : -1.0) * binom * f(x + (0.5 * n - k) * h);
    binom = binom * (n - k) / (k + 1);
  }
  return sum / std::pow(h, n);
}

double rodrigues(int n, double a, double b, double x) {
  auto g = [&](double t) { return std::pow(1.0 - t, n + a) * std::pow(1.0 + t, n + b); };
  const double d = nth_derivative(g, n, x, 2e-3);
  return (n % 2 == 0 ? 1.0 : -1.0) / (std::pow(2.0, n) * std::tgamma(n + 1.0)) * std::pow(1.0 - x, -a) *
         std::pow(1.0 + x, -b) * d;
}

int sign_changes(const std::vector<double>& v) {
  int count = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if ((v[i - 1] < 0.0) != (v[i] < 0.0)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("Laguerre examples") {
  CHECK(laguerre(0, 1.7, 3.3) == 1.0);
  CHECK(laguerre(1, 1.7, 3.3) == doctest::Approx(1.0 + 1.7 - 3.3));
  CHECK(laguerre(2, 1.0, 2.0) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(laguerre(-1, 0.0, 1.0), DomainError);
}

TEST_CASE("Laguerre matches explicit low-degree expansions") {
  testing::Draws draws;
  for (int i = 0; i < 200; ++i) {
    const double a = draws.uniform(-0.9, 5.0);
    const double x = draws.uniform(0.0, 10.0);
    const double l2 = 0.5 * (a + 1) * (a + 2) - (a + 2) * x + 0.5 * x * x;
    const double l3 = (a + 1) * (a + 2) * (a + 3) / 6.0 - (a + 2) * (a + 3) * x / 2.0 + (a + 3) * x * x / 2.0 -
                      x * x * x / 6.0;
    CHECK(std::abs(laguerre(2, a, x) - l2) <= 1e-13 * std::max(1.0, std::abs(l2)) * 10);
    CHECK(std::abs(laguerre(3, a, x) - l3) <= 1e-13 * std::max(1.0, std::abs(l3)) * 10);
  }
}

TEST_CASE("Laguerre orthogonality") {
  const double a = 0.7;
  const RadialGrid grid(0.0, 80.0, 40001);
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= m; ++n) {
      const RadialFunction f = RadialFunction::sample(grid, [&](double x) {
        return std::pow(x, a) * std::exp(-x) * laguerre(m, a, x) * laguerre(n, a, x);
      });
      const double integral = simpson(f);
      if (m == n) {
        const double expected = std::tgamma(n + a + 1.0) / std::tgamma(n + 1.0);
        CHECK(integral == doctest::Approx(expected).epsilon(1e-4));
      } else {
        CHECK(std::abs(integral) <= 1e-4);
      }
    }
  }
}

TEST_CASE("Jacobi examples") {
  CHECK(jacobi(0, 0.3, 1.2, 0.4) == 1.0);
  for (double k : {0.0, 0.5, 2.0, 7.5}) CHECK(jacobi(1, k, 1.3, 1.0) == doctest::Approx(k + 1.0));
  CHECK_THROWS_AS(jacobi(2, -1.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(jacobi(-1, 0.0, 0.0, 0.0), DomainError);
}

TEST_CASE("Jacobi matches explicit low-degree expansions") {
  testing::Draws draws;
  for (int i = 0; i < 200; ++i) {
    const double a = draws.uniform(-0.9, 5.0);
    const double b = draws.uniform(-0.9, 5.0);
    const double x = draws.uniform(-1.0, 1.0);
    const double p1 = (a + 1) + (a + b + 2) * (x - 1) / 2;
    const double p2 = (a + 1) * (a + 2) / 2 + (a + 2) * (a + b + 3) * (x - 1) / 2 +
                      (a + b + 3) * (a + b + 4) * (x - 1) * (x - 1) / 8;
    CHECK(std::abs(jacobi(1, a, b, x) - p1) <= 1e-13 * std::max(1.0, std::abs(p1)));
    CHECK(std::abs(jacobi(2, a, b, x) - p2) <= 1e-13 * std::max(1.0, std::abs(p2)) * 10);
  }
}

TEST_CASE("Jacobi reflection symmetry") {
  testing::Draws draws;
  for (int n = 0; n <= 10; ++n) {
    for (int i = 0; i < 50; ++i) {
      const double k = draws.uniform(0.0, 6.0);
      const double u = draws.uniform(0.0, 6.0);
      const double xi = draws.uniform(0.0, 1.0);
      const double lhs = jacobi(n, u, k, 2 * xi - 1);
      const double rhs = (n % 2 == 0 ? 1.0 : -1.0) * jacobi(n, k, u, 1 - 2 * xi);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("Jacobi agrees with the Rodrigues formula") {
  for (int n = 0; n <= 4; ++n) {
    for (double x : {-0.6, -0.1, 0.3, 0.7}) {
      const double expected = rodrigues(n, 0.8, 1.6, x);
      CHECK(jacobi(n, 0.8, 1.6, x) == doctest::Approx(expected).epsilon(1e-4));
    }
  }
}

TEST_CASE("Jacobi P_n has n zeros in (-1, 1)") {
  for (int n = 0; n <= 8; ++n) {
    std::vector<double> v;
    for (int i = 1; i < 4000; ++i) v.push_back(jacobi(n, 1.4, 0.6, -1.0 + i / 2000.0));
    CHECK(sign_changes(v) == n);
  }
}

TEST_CASE("normalize: exponential on [0, 40]") {
  const RadialFunction f = RadialFunction::sample(RadialGrid(0.0, 40.0, 20001), [](double r) { return std::exp(-r); });
  const Normalization n = normalize(f);
  CHECK(n.factor == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(n.rel_error <= 1e-8);
}

TEST_CASE("normalize: Model A ground state round trip") {
  ParamValues v;
  v.b0 = 1;
  v.mu = 1;
  const Wavefunction wf(ModelKind::A, {0, 0}, PhysicalParams(v));
  const RadialFunction u = RadialFunction::sample(RadialGrid(0.0, 40.0, 8001), [&](double r) { return wf.reduced(r); });
  const Normalization n = normalize(u);
  CHECK(n.factor == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("normalize: tail truncation beyond 20 decay lengths") {
  auto f = [](double r) { return r * std::exp(-1.5 * r); };
  const double n20 = normalize(RadialFunction::sample(RadialGrid(0.0, 20.0, 8001), f)).factor;
  const double n40 = normalize(RadialFunction::sample(RadialGrid(0.0, 40.0, 16001), f)).factor;
  CHECK(std::abs(n20 - n40) / n40 < 1e-8);
}

TEST_CASE("normalize rejects non-integrable samples") {
  CHECK_THROWS_AS(normalize(RadialFunction::sample(RadialGrid(0.0, 10.0, 1001), [](double) { return 0.0; })),
                  DomainError);
  CHECK_THROWS_AS(normalize(RadialFunction::sample(RadialGrid(0.0, 10.0, 1001), [](double r) { return std::exp(r); })),
                  DomainError);
}

TEST_CASE("simpson handles odd interval counts") {
  const RadialFunction f = RadialFunction::sample(RadialGrid(0.0, 1.0, 102), [](double x) { return x * x * x; });
  CHECK(simpson(f) == doctest::Approx(0.25).epsilon(1e-12));
}
