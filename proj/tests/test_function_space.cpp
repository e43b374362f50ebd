#include <cmath>

#include "doctest.h"

#include "barron/errors.hpp"
#include "barron/function_space.hpp"
#include "barron/quadrature.hpp"

using namespace barron;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrt2 = std::sqrt(2.0);

BasisSpec basis_of(BasisKind kind) {
  BasisSpec b;
  b.kind = kind;
  return b;
}
}  // namespace

TEST_CASE("frequency bands per basis kind") {
  const BasisSpec trig = basis_of(BasisKind::real_trigonometric);
  CHECK(trig.frequency_band(1) == 1);
  CHECK(trig.frequency_band(2) == 1);
  CHECK(trig.frequency_band(3) == 2);
  CHECK(trig.frequency_band(4) == 2);
  const BasisSpec sine = basis_of(BasisKind::sine);
  CHECK(sine.frequency_band(1) == 1);
  CHECK(sine.frequency_band(5) == 5);
  const BasisSpec cplx = basis_of(BasisKind::complex_exponential);
  CHECK(cplx.frequency_band(1) == 1);
  CHECK(cplx.frequency_band(2) == 1);
}

TEST_CASE("basis values at pinned points") {
  const BasisSpec trig = basis_of(BasisKind::real_trigonometric);
  CHECK(trig.eval_basis(1, 0.0) == doctest::Approx(kSqrt2).epsilon(1e-14));   // sqrt2 cos
  CHECK(trig.eval_basis(2, 0.0) == doctest::Approx(0.0).epsilon(1e-14));      // sqrt2 sin
  CHECK(trig.eval_basis(2, 0.25) == doctest::Approx(kSqrt2).epsilon(1e-14));  // sin(pi/2)
  const BasisSpec sine = basis_of(BasisKind::sine);
  CHECK(sine.eval_basis(1, 0.5) == doctest::Approx(kSqrt2).epsilon(1e-14));  // sin(pi/2)
  CHECK(sine.eval_basis(2, 0.5) == doctest::Approx(0.0).epsilon(1e-13));     // sin(pi)
}

TEST_CASE("basis functions are L2-orthonormal up to declared norm") {
  const QuadRule rule = composite_gauss(0.0, 1.0, 512);
  for (BasisKind kind :
       {BasisKind::real_trigonometric, BasisKind::sine, BasisKind::complex_exponential}) {
    const BasisSpec basis = basis_of(kind);
    for (int pos = 1; pos <= 6; ++pos) {
      double norm_sq = 0.0;
      for (int q = 0; q < rule.size(); ++q)
        norm_sq += rule.w[q] * basis.eval_basis(pos, rule.x[q]) * basis.eval_basis(pos, rule.x[q]);
      CHECK(norm_sq == doctest::Approx(basis.basis_norm_sq(pos)).epsilon(1e-12));
      for (int other = pos + 1; other <= 6; ++other) {
        double cross = 0.0;
        for (int q = 0; q < rule.size(); ++q)
          cross += rule.w[q] * basis.eval_basis(pos, rule.x[q]) * basis.eval_basis(other, rule.x[q]);
        CHECK(std::abs(cross) < 1e-12);
      }
    }
  }
}

TEST_CASE("second derivative matches the modal symbol") {
  for (BasisKind kind : {BasisKind::real_trigonometric, BasisKind::sine}) {
    const BasisSpec basis = basis_of(kind);
    for (int pos = 1; pos <= 5; ++pos) {
      const int n = basis.frequency_band(pos);
      const double omega = (kind == BasisKind::sine ? kPi : 2.0 * kPi) * n;
      for (double x : {0.1, 0.37, 0.62}) {
        CHECK(basis.eval_basis_deriv2(pos, x) ==
              doctest::Approx(-omega * omega * basis.eval_basis(pos, x)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("domain validation") {
  DomainSpec cut;
  cut.kind = DomainKind::cut;
  cut.N = 2;
  cut.delta = 0.6;
  CHECK_THROWS_AS(cut.validate(), validation_error);
  cut.delta = 0.05;
  CHECK_NOTHROW(cut.validate());
  cut.N = 0;
  CHECK_THROWS_AS(cut.validate(), validation_error);

  DomainSpec decay;
  decay.kind = DomainKind::decay;
  decay.decay_C = 0.0;
  decay.decay_exponent = 1.5;
  CHECK_THROWS_AS(decay.validate(), validation_error);
  decay.decay_C = 0.4;
  decay.decay_exponent = 0.0;
  CHECK_THROWS_AS(decay.validate(), validation_error);
  decay.decay_exponent = 1.5;
  CHECK_NOTHROW(decay.validate());
}

TEST_CASE("half widths per domain kind") {
  DomainSpec bound;
  CHECK(bound.half_width(1) == doctest::Approx(0.5));
  CHECK(bound.half_width(9) == doctest::Approx(0.5));

  DomainSpec cut;
  cut.kind = DomainKind::cut;
  cut.N = 2;
  cut.delta = 0.05;
  CHECK(cut.half_width(2) == doctest::Approx(0.5));
  CHECK(cut.half_width(3) == doctest::Approx(0.05));

  DomainSpec decay;
  decay.kind = DomainKind::decay;
  decay.decay_C = 0.4;
  decay.decay_exponent = 1.5;
  CHECK(decay.half_width(2) == doctest::Approx(0.4 * std::pow(2.0, -1.5)).epsilon(1e-14));
}

TEST_CASE("sampling respects domain bounds") {
  DomainSpec bound;
  const CoeffVector v = sample(bound, 4, 7);
  REQUIRE(v.size() == 4);
  for (double b : v.coeffs) CHECK(std::abs(b) < 0.5);

  DomainSpec cut;
  cut.kind = DomainKind::cut;
  cut.N = 2;
  cut.delta = 0.05;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const CoeffVector w = sample(cut, 4, seed);
    CHECK(std::abs(w.coeffs[0]) < 0.5);
    CHECK(std::abs(w.coeffs[1]) < 0.5);
    CHECK(std::abs(w.coeffs[2]) < 0.05);
    CHECK(std::abs(w.coeffs[3]) < 0.05);
  }

  DomainSpec decay;
  decay.kind = DomainKind::decay;
  decay.decay_C = 0.4;
  decay.decay_exponent = 1.5;
  const CoeffVector d = sample(decay, 3, 1);
  CHECK(std::abs(d.coeffs[1]) < 0.4 * std::pow(2.0, -1.5));
  CHECK(std::abs(d.coeffs[2]) < 0.4 * std::pow(3.0, -1.5));
}

TEST_CASE("sampling is deterministic per seed") {
  DomainSpec bound;
  const CoeffVector a = sample(bound, 6, 42);
  const CoeffVector b = sample(bound, 6, 42);
  CHECK(a.coeffs == b.coeffs);  // bit-identical
  const CoeffVector c = sample(bound, 6, 43);
  CHECK(a.coeffs != c.coeffs);
}

TEST_CASE("sample rejects invalid requests") {
  DomainSpec bound;
  CHECK_THROWS_AS(sample(bound, 0, 1), validation_error);
  DomainSpec cut;
  cut.kind = DomainKind::cut;
  cut.N = 4;
  cut.delta = 0.1;
  CHECK_THROWS_AS(sample(cut, 2, 1), validation_error);  // n_coeffs < N
}

TEST_CASE("evaluate sums coefficient-weighted basis functions") {
  CoeffVector zero;
  zero.coeffs = {0.0, 0.0, 0.0};
  for (double x : {0.0, 0.3, 1.0}) CHECK(evaluate(zero, x) == 0.0);

  CoeffVector v;
  v.basis = basis_of(BasisKind::real_trigonometric);
  v.coeffs = {0.3};
  CHECK(evaluate(v, 0.0) == doctest::Approx(0.3 * kSqrt2).epsilon(1e-14));

  CoeffVector s;
  s.basis = basis_of(BasisKind::sine);
  s.coeffs = {1.0};
  CHECK(evaluate(s, 0.5) == doctest::Approx(kSqrt2).epsilon(1e-14));
}

TEST_CASE("extract_coeffs round-trips representable functions") {
  const BasisSpec trig = basis_of(BasisKind::real_trigonometric);

  const CoeffVector zeros = extract_coeffs([](double) { return 0.0; }, trig, 6, 256);
  for (double b : zeros.coeffs) CHECK(std::abs(b) < 1e-12);

  // g = Phi_3 exactly.
  const CoeffVector unit =
      extract_coeffs([&](double x) { return trig.eval_basis(3, x); }, trig, 6, 512);
  for (int pos = 1; pos <= 6; ++pos) {
    const double expect = pos == 3 ? 1.0 : 0.0;
    CHECK(std::abs(unit.coeffs[static_cast<std::size_t>(pos - 1)] - expect) < 1e-8);
  }

  // g(x) = sin(2 pi x) = (1/sqrt2) * Phi_2.
  const CoeffVector sine2 =
      extract_coeffs([](double x) { return std::sin(2.0 * kPi * x); }, trig, 4, 1024);
  CHECK(std::abs(sine2.coeffs[1] - 1.0 / kSqrt2) < 1e-8);
  CHECK(std::abs(sine2.coeffs[0]) < 1e-8);

  // Random representable v round-trips through evaluate.
  DomainSpec bound;
  for (BasisKind kind : {BasisKind::real_trigonometric, BasisKind::sine}) {
    const BasisSpec basis = basis_of(kind);
    CoeffVector v = sample(bound, 5, 99, basis);
    const CoeffVector back =
        extract_coeffs([&](double x) { return evaluate(v, x); }, basis, 5, 512);
    for (int i = 0; i < 5; ++i)
      CHECK(std::abs(back.coeffs[static_cast<std::size_t>(i)] -
                     v.coeffs[static_cast<std::size_t>(i)]) < 1e-8);
  }
}

TEST_CASE("extract_coeffs enforces its resolution precondition") {
  const BasisSpec trig = basis_of(BasisKind::real_trigonometric);
  // 8 positions reach band 4; 4*4 = 16 points minimum.
  CHECK_THROWS_AS(extract_coeffs([](double) { return 0.0; }, trig, 8, 8), validation_error);
}
