#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "barron/errors.hpp"
#include "barron/functional_zoo.hpp"
#include "barron/quadrature.hpp"

using namespace barron;
using nlohmann::json;

namespace {
constexpr double kPi = 3.14159265358979323846;
using blocks_t = std::vector<std::vector<int>>;
}  // namespace

TEST_CASE("linear functional: values, structure, linearity") {
  const FunctionalSpec f = make_linear({0.2, -0.1, 0.3});
  CHECK(f.input_dim == 3);
  CHECK(f.structure == blocks_t{{1}, {2}, {3}});
  CHECK(f.separable);
  CHECK(f.evaluate({0.1, 0.2, -0.3}) == doctest::Approx(-0.09).epsilon(1e-14));
  CHECK(f.evaluate({0.0, 0.0, 0.0}) == 0.0);

  // linearity
  const std::vector<double> u{0.1, -0.2, 0.05}, v{-0.3, 0.4, 0.2};
  std::vector<double> mix(3);
  for (int i = 0; i < 3; ++i) mix[static_cast<std::size_t>(i)] =
      2.0 * u[static_cast<std::size_t>(i)] - 0.5 * v[static_cast<std::size_t>(i)];
  CHECK(f.evaluate(mix) == doctest::Approx(2.0 * f.evaluate(u) - 0.5 * f.evaluate(v)).epsilon(1e-12));

  // block closed form: weight * i(-1)^kappa / (2 pi kappa)
  std::complex<double> out;
  REQUIRE(f.closed_form(0, {1}, out));
  CHECK(out.real() == doctest::Approx(0.0));
  CHECK(out.imag() == doctest::Approx(0.2 * -0.15915494309189535).epsilon(1e-14));
  REQUIRE(f.closed_form(1, {0}, out));
  CHECK(std::abs(out) == 0.0);
}

TEST_CASE("zero weights drop their blocks") {
  const FunctionalSpec f = make_linear({0.0, 1.0});
  CHECK(f.structure == blocks_t{{2}});
  CHECK(f.input_dim == 2);
  const FunctionalSpec g = make_cubic({0.0, 0.0, 0.5});
  CHECK(g.structure == blocks_t{{3}});
}

TEST_CASE("cubic functional: values and closed form") {
  const FunctionalSpec f = make_cubic({1.0});
  CHECK(f.evaluate({0.4}) == doctest::Approx(0.064).epsilon(1e-14));
  CHECK(f.evaluate({0.0}) == 0.0);

  const FunctionalSpec g = make_cubic({2.0, -0.5});
  CHECK(g.evaluate({0.3, 0.2}) == doctest::Approx(0.05).epsilon(1e-13));
  CHECK(g.block_eval(1, {0.2}) == doctest::Approx(-0.5 * 0.008).epsilon(1e-13));

  std::complex<double> out;
  REQUIRE(f.closed_form(0, {1}, out));
  CHECK(out.real() == doctest::Approx(0.0));
  CHECK(out.imag() == doctest::Approx(-0.015600084948074217).epsilon(1e-12));
  REQUIRE(f.closed_form(0, {0}, out));
  CHECK(std::abs(out) == 0.0);  // odd integrand
}

TEST_CASE("bilinear functional: overlapping pair blocks") {
  const FunctionalSpec f = make_bilinear({1.0});
  CHECK(f.input_dim == 2);
  CHECK(f.structure == blocks_t{{1, 2}});
  CHECK(f.evaluate({0.2, 0.3}) == doctest::Approx(0.06).epsilon(1e-14));

  const FunctionalSpec g = make_bilinear({0.2, 0.3});
  CHECK(g.input_dim == 3);
  CHECK(g.structure == blocks_t{{1, 2}, {2, 3}});
  CHECK(g.evaluate({0.5, 0.6, -0.1}) == doctest::Approx(0.042).epsilon(1e-13));
  CHECK(g.block_eval(1, {0.6, -0.1}) == doctest::Approx(-0.018).epsilon(1e-13));

  // product of two odd one-dimensional integrals
  std::complex<double> out;
  REQUIRE(f.closed_form(0, {1, -1}, out));
  CHECK(out.real() == doctest::Approx(1.0 / (4.0 * kPi * kPi)).epsilon(1e-13));
  CHECK(out.imag() == doctest::Approx(0.0));
  REQUIRE(f.closed_form(0, {0, 1}, out));
  CHECK(std::abs(out) == 0.0);
}

namespace {
DomainSpec decay_domain(int N, double C, double p) {
  DomainSpec d;
  d.kind = DomainKind::decay;
  d.N = N;
  d.decay_C = C;
  d.decay_exponent = p;
  return d;
}
}  // namespace

TEST_CASE("energy functional: pinned modal values") {
  const FunctionalSpec f = make_energy(1.0, decay_domain(2, 0.5, 2.0));
  CHECK(f.input_dim == 2);
  CHECK(f.basis.kind == BasisKind::real_trigonometric);
  // single cosine mode, band 1: E = 2 pi^2 * 0.1^2
  CHECK(f.evaluate({0.1, 0.0}) == doctest::Approx(0.19739208802178718).epsilon(1e-15));

  // alpha = 2, position 3 sits in band 2: E = 2 pi^2 * 2 * 4 * 0.05^2
  const FunctionalSpec g = make_energy(2.0, decay_domain(4, 0.5, 2.0));
  CHECK(g.evaluate({0.0, 0.0, 0.05, 0.0}) == doctest::Approx(0.39478417604357435).epsilon(1e-15));

  // modal weights follow the band of each position
  for (int i = 1; i <= 4; ++i) {
    const int band = (i + 1) / 2;
    CHECK(g.weights[static_cast<std::size_t>(i - 1)] ==
          doctest::Approx(2.0 * kPi * kPi * 2.0 * band * band).epsilon(1e-15));
  }
}

TEST_CASE("energy matches quadrature of -alpha/2 int v v''") {
  const double alpha = 1.3;
  const FunctionalSpec f = make_energy(alpha, decay_domain(4, 0.5, 2.0));
  CoeffVector v;
  v.basis = f.basis;
  v.coeffs = {0.12, -0.05, 0.03, 0.02};
  const QuadRule rule = composite_gauss(0.0, 1.0, 2048);
  double acc = 0.0;
  for (int q = 0; q < rule.size(); ++q) {
    double vv = 0.0, vpp = 0.0;
    for (int pos = 1; pos <= v.size(); ++pos) {
      vv += v.coeffs[static_cast<std::size_t>(pos - 1)] * v.basis.eval_basis(pos, rule.x[q]);
      vpp += v.coeffs[static_cast<std::size_t>(pos - 1)] * v.basis.eval_basis_deriv2(pos, rule.x[q]);
    }
    acc += rule.w[q] * vv * vpp;
  }
  const double oracle = -0.5 * alpha * acc;
  CHECK(f(v) == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("energy closed form per block") {
  const FunctionalSpec f = make_energy(1.0, decay_domain(2, 0.5, 2.0));
  std::complex<double> out;
  const double u1 = 2.0 * kPi * kPi;
  REQUIRE(f.closed_form(0, {0}, out));
  CHECK(out.real() == doctest::Approx(u1 / 12.0).epsilon(1e-14));
  REQUIRE(f.closed_form(0, {1}, out));
  CHECK(out.real() == doctest::Approx(-u1 / (2.0 * kPi * kPi)).epsilon(1e-14));
  CHECK(out.imag() == doctest::Approx(0.0));
  REQUIRE(f.closed_form(0, {2}, out));
  CHECK(out.real() == doctest::Approx(u1 / (8.0 * kPi * kPi)).epsilon(1e-14));
}

TEST_CASE("energy rejects unusable configurations") {
  CHECK_THROWS_AS(make_energy(0.0, decay_domain(2, 0.5, 2.0)), validation_error);
  CHECK_THROWS_AS(make_energy(1.0, decay_domain(2, 0.5, 1.5)), validation_error);
  CHECK_THROWS_AS(make_energy(1.0, decay_domain(0, 0.5, 2.0)), validation_error);
  DomainSpec bound;
  CHECK_THROWS_AS(make_energy(1.0, bound), validation_error);
}

TEST_CASE("l2 norm functional") {
  const FunctionalSpec f = make_l2norm(decay_domain(2, 0.5, 1.0));
  CHECK_FALSE(f.separable);
  CHECK(f.structure == blocks_t{{1, 2}});
  CHECK(f.evaluate({0.3, 0.4}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(f.evaluate({0.1, 0.0}) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(f.evaluate({0.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(make_l2norm(decay_domain(2, 0.5, 0.5)), validation_error);
  CHECK_THROWS_AS(make_l2norm(decay_domain(0, 0.5, 1.0)), validation_error);
}

TEST_CASE("constant functional") {
  const FunctionalSpec f = make_constant(2.5, 3);
  CHECK(f.input_dim == 3);
  CHECK(f.evaluate({0.1, -0.4, 0.2}) == 2.5);
  std::complex<double> out;
  REQUIRE(f.closed_form(0, {0}, out));
  CHECK(out == std::complex<double>(2.5, 0.0));
  REQUIRE(f.closed_form(0, {3}, out));
  CHECK(std::abs(out) == 0.0);
  CHECK_THROWS_AS(make_constant(1.0, 0), validation_error);
}

TEST_CASE("functionals ignore coordinates beyond their input range") {
  const std::vector<double> base{0.1, 0.2};
  std::vector<double> padded = base;
  padded.push_back(99.0);
  padded.push_back(-3.0);

  CHECK(make_linear({0.2, -0.1}).evaluate(padded) ==
        make_linear({0.2, -0.1}).evaluate(base));
  CHECK(make_cubic({1.0, 0.5}).evaluate(padded) == make_cubic({1.0, 0.5}).evaluate(base));
  CHECK(make_bilinear({0.3}).evaluate(padded) == make_bilinear({0.3}).evaluate(base));
  const FunctionalSpec e = make_energy(1.0, decay_domain(2, 0.5, 2.0));
  CHECK(e.evaluate(padded) == e.evaluate(base));
}

TEST_CASE("functionals reject vectors shorter than their input range") {
  CHECK_THROWS_AS(make_linear({1.0, 2.0, 3.0}).evaluate({0.1, 0.2}), validation_error);
  CHECK_THROWS_AS(make_bilinear({1.0}).evaluate({0.1}), validation_error);
  CHECK_THROWS_AS(make_energy(1.0, decay_domain(3, 0.5, 2.0)).evaluate({0.1, 0.2}),
                  validation_error);
}

TEST_CASE("factory builds each functional from a name and params") {
  const FunctionalSpec lin = make_functional("linear", json{{"weights", {1.0, 2.0}}});
  CHECK(lin.name == "linear");
  CHECK(lin.input_dim == 2);
  CHECK(lin.evaluate({0.1, 0.1}) == doctest::Approx(0.3));

  const json energy_params{
      {"alpha", 2.0},
      {"domain", {{"kind", "decay"}, {"N", 4}, {"decay_C", 0.5}, {"decay_exponent", 2.0}}}};
  const FunctionalSpec e = make_functional("energy", energy_params);
  CHECK(e.evaluate({0.0, 0.0, 0.05, 0.0}) == doctest::Approx(0.39478417604357435).epsilon(1e-15));

  const FunctionalSpec c = make_functional("constant", json{{"value", 1.25}});
  CHECK(c.evaluate({0.0}) == 1.25);
}

TEST_CASE("factory rejects malformed requests") {
  CHECK_THROWS_AS(make_functional("warp-drive", json::object()), validation_error);
  CHECK_THROWS_AS(make_functional("linear", json::object()), validation_error);
  CHECK_THROWS_AS(make_functional("linear", json{{"weights", json::array()}}), validation_error);
  CHECK_THROWS_AS(make_functional("linear", json{{"weights", {"a", "b"}}}), validation_error);
  CHECK_THROWS_AS(make_functional("energy", json{{"alpha", 1.0}}), validation_error);
  CHECK_THROWS_AS(make_functional("constant", json::object()), validation_error);
}

TEST_CASE("factory applies domain and basis overrides") {
  const json params{{"weights", {1.0}},
                    {"domain", {{"kind", "cut"}, {"N", 1}, {"delta", 0.1}}},
                    {"basis", "sine"}};
  const FunctionalSpec f = make_functional("linear", params);
  CHECK(f.domain.kind == DomainKind::cut);
  CHECK(f.domain.N == 1);
  CHECK(f.domain.delta == doctest::Approx(0.1));
  CHECK(f.basis.kind == BasisKind::sine);
  CHECK_THROWS_AS(
      make_functional("linear", json{{"weights", {1.0}}, {"domain", {{"kind", "torus"}}}}),
      validation_error);
}
