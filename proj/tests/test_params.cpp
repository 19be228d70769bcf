#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "pdm/config.hpp"
#include "pdm/error.hpp"
#include "pdm/params.hpp"
#include "support.hpp"

using namespace pdm;

namespace {

PhysicalParams make(double e, double b0, double mu, double kz, double alpha = 0.0) {
  ParamValues v;
  v.e = e;
  v.b0 = b0;
  v.mu = mu;
  v.kz = kz;
  v.alpha_ab = alpha;
  return PhysicalParams(v);
}

}  // namespace

TEST_CASE("m_tilde subtracts the flux") {
  CHECK(m_tilde({0, 0}, make(1, 0, 0, 0, 0.0)) == 0.0);
  CHECK(m_tilde({0, 3}, make(1, 0, 0, 0, 0.5)) == 2.5);
  CHECK(m_tilde({0, -1}, make(1, 0, 0, 0, -0.25)) == -0.75);
}

TEST_CASE("e_tilde is minus the squared magnetic gap") {
  CHECK(e_tilde(make(1, 1, 1, 0)) == -1.0);
  CHECK(e_tilde(make(1, 0, 1, 2)) == -4.0);
  CHECK(e_tilde(make(2, 1, 0.5, 1)) == -2.0);
}

TEST_CASE("e_tilde is never positive") {
  testing::Draws draws;
  for (int i = 0; i < 1000; ++i) {
    ParamValues v = draws.gapped_params();
    v.kz = draws.uniform(-5.0, 5.0);
    v.b0 = draws.uniform(0.0, 5.0);
    CHECK(e_tilde(PhysicalParams(v)) <= 0.0);
  }
}

TEST_CASE("m_tilde is an integer exactly when the flux is") {
  testing::Draws draws;
  for (int i = 0; i < 200; ++i) {
    const int m = draws.integer(-10, 10);
    const double integral = draws.integer(-3, 3);
    const double fractional = integral + draws.uniform(0.01, 0.99);
    const double a = m_tilde({0, m}, make(1, 0, 0, 0, integral));
    const double b = m_tilde({0, m}, make(1, 0, 0, 0, fractional));
    CHECK(a == std::round(a));
    CHECK(b != std::round(b));
  }
}

TEST_CASE("parameter validation") {
  ParamValues v;
  v.eta = 0.0;
  CHECK_THROWS_AS(PhysicalParams{v}, ValidationError);
  v.eta = -1.0;
  CHECK_THROWS_AS(PhysicalParams{v}, ValidationError);
  v = ParamValues{};
  v.delta = -0.1;
  CHECK_THROWS_AS(PhysicalParams{v}, ValidationError);
  v = ParamValues{};
  v.e = 0.0;
  CHECK_THROWS_AS(PhysicalParams{v}, ValidationError);
  v = ParamValues{};
  v.b0 = -1.0;
  CHECK_THROWS_AS(PhysicalParams{v}, ValidationError);
  v = ParamValues{};
  v.mu = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(PhysicalParams{v}, ValidationError);
  CHECK_THROWS_AS(validate(QuantumState{-1, 0}), ValidationError);
  CHECK_NOTHROW(validate(QuantumState{0, -7}));
}

TEST_CASE("a vanishing magnetic gap is flagged, not rejected") {
  const PhysicalParams p = make(1, 0, 1, 0);
  CHECK_FALSE(p.has_magnetic_gap());
  CHECK(make(1, 1, 1, 0).has_magnetic_gap());
}

TEST_CASE("with() replaces one value and revalidates") {
  const PhysicalParams p = make(1, 1, 1, 0);
  CHECK(p.with(Param::beta, 0.5).beta() == 0.5);
  CHECK(p.with(Param::beta, 0.5).b0() == 1.0);
  CHECK_THROWS_AS(p.with(Param::eta, 0.0), ValidationError);
}

TEST_CASE("parameter names round trip") {
  for (Param p : kAllParams) CHECK(parse_param(param_name(p)) == p);
  CHECK(parse_param("alpha") == Param::alpha_ab);
  CHECK_FALSE(parse_param("gamma").has_value());
}

TEST_CASE("config files set parameters by field name") {
  std::istringstream in("# scenario\n e = -1\nb0=2.5  # strength\n\nalpha_ab = 0.25\nkz=1e-1\n");
  ParamValues v;
  apply_config(in, v);
  CHECK(v.e == -1.0);
  CHECK(v.b0 == 2.5);
  CHECK(v.alpha_ab == 0.25);
  CHECK(v.kz == doctest::Approx(0.1));
  CHECK(v.eta == 1.0);
}

TEST_CASE("config errors name the line") {
  ParamValues v;
  std::istringstream unknown("e=1\ngamma=2\n");
  CHECK_THROWS_WITH_AS(apply_config(unknown, v), doctest::Contains("line 2"), ValidationError);
  std::istringstream alias("alpha=0.5\n");
  CHECK_THROWS_AS(apply_config(alias, v), ValidationError);
  std::istringstream bad_number("b0 = abc\n");
  CHECK_THROWS_AS(apply_config(bad_number, v), ValidationError);
  std::istringstream no_eq("b0 1\n");
  CHECK_THROWS_AS(apply_config(no_eq, v), ValidationError);
  CHECK_THROWS_AS(apply_config_file("/nonexistent/params.cfg", v), ValidationError);
}
