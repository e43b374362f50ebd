#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"

#include "barron/errors.hpp"
#include "barron/functional_zoo.hpp"
#include "barron/rng.hpp"
#include "barron/spectral.hpp"

using namespace barron;

namespace {
constexpr double kPi = 3.14159265358979323846;
using cplx = std::complex<double>;

MultiIndex idx(std::vector<std::pair<int, int>> pv) { return MultiIndex::from_pairs(pv); }

DomainSpec cut_domain(int N, double delta) {
  DomainSpec d;
  d.kind = DomainKind::cut;
  d.N = N;
  d.delta = delta;
  return d;
}

// Composite Simpson on [-1/2, 1/2]; deliberately a different quadrature
// family from the Gauss-Legendre rules used by the library.
cplx simpson_coeff(const std::function<double(double)>& f, int kappa, int intervals) {
  const double h = 1.0 / intervals;
  cplx acc{0.0, 0.0};
  auto term = [&](double x) { return f(x) * std::polar(1.0, -2.0 * kPi * kappa * x); };
  acc += term(-0.5) + term(0.5);
  for (int i = 1; i < intervals; ++i) {
    const double x = -0.5 + i * h;
    acc += (i % 2 == 1 ? 4.0 : 2.0) * term(x);
  }
  return acc * (h / 3.0);
}
}  // namespace

TEST_CASE("cubic coefficient table at L=32") {
  const FunctionalSpec f = make_cubic({1.0});
  const FourierTable t = coefficients(f, 32, 256);
  CHECK(t.entries.size() == 65);
  CHECK_FALSE(t.cut);

  CHECK(std::abs(t.entries.at(MultiIndex{}).a) == 0.0);  // odd integrand
  const cplx a1 = t.entries.at(idx({{1, 1}})).a;
  CHECK(std::abs(a1.real()) < 1e-18);
  CHECK(std::abs(a1.imag() - -0.015600084948074217) < 1e-15);

  for (const auto& [k, e] : t.entries) {
    CHECK(e.provenance == "closed-form");
    const auto& mirror = t.entries.at(-k);
    CHECK(std::abs(mirror.a - std::conj(e.a)) < 1e-12);
  }
}

TEST_CASE("linear coefficient table") {
  const FourierTable t = coefficients(make_linear({1.0}), 8, 64);
  CHECK(t.entries.size() == 17);
  CHECK(std::abs(t.entries.at(MultiIndex{}).a) == 0.0);
  const cplx a1 = t.entries.at(idx({{1, 1}})).a;
  CHECK(std::abs(a1 - cplx(0.0, -0.15915494309189535)) < 1e-16);
  // weight scales coefficients linearly
  const FourierTable t2 = coefficients(make_linear({0.25}), 8, 64);
  CHECK(std::abs(t2.entries.at(idx({{1, 1}})).a - 0.25 * a1) < 1e-17);
}

TEST_CASE("closed forms agree with direct quadrature") {
  const FunctionalSpec cub = make_cubic({1.0});
  const FunctionalSpec lin = make_linear({1.0});
  const FunctionalSpec eng = [] {
    DomainSpec d;
    d.kind = DomainKind::decay;
    d.N = 2;
    d.decay_C = 0.5;
    d.decay_exponent = 2.0;
    return make_energy(1.0, d);
  }();

  for (int kappa : {1, 5, 32}) {
    cplx closed;
    REQUIRE(cub.closed_form(0, {kappa}, closed));
    CHECK(std::abs(closed - block_integral_quadrature(cub, 0, {kappa}, 512)) < 1e-12);
    REQUIRE(lin.closed_form(0, {kappa}, closed));
    CHECK(std::abs(closed - block_integral_quadrature(lin, 0, {kappa}, 512)) < 1e-12);
    REQUIRE(eng.closed_form(0, {kappa}, closed));
    CHECK(std::abs(closed - block_integral_quadrature(eng, 0, {kappa}, 512)) < 1e-9);
  }
  cplx closed;
  REQUIRE(eng.closed_form(0, {0}, closed));
  CHECK(std::abs(closed - block_integral_quadrature(eng, 0, {0}, 256)) < 1e-9);
}

TEST_CASE("bilinear table: two-dimensional blocks and overlap merging") {
  const FourierTable t = coefficients(make_bilinear({1.0}), 4, 32);
  CHECK(t.entries.size() == 81);
  CHECK(std::abs(t.entries.at(MultiIndex{}).a) == 0.0);
  const double expect = 1.0 / (4.0 * kPi * kPi);
  CHECK(std::abs(t.entries.at(idx({{1, 1}, {2, -1}})).a - expect) < 1e-14);
  CHECK(std::abs(t.entries.at(idx({{1, 1}, {2, 1}})).a + expect) < 1e-14);
  // kappa with a zero component kills the block integral
  CHECK(std::abs(t.entries.at(idx({{1, 2}})).a) == 0.0);

  const FunctionalSpec two = make_bilinear({1.0, 1.0});
  const FourierTable t2 = coefficients(two, 2, 16);
  CHECK(std::abs(t2.entries.at(idx({{1, 1}, {2, -1}})).a - expect) < 1e-14);
  CHECK(std::abs(t2.entries.at(idx({{2, 1}, {3, -1}})).a - expect) < 1e-14);
  CHECK(std::abs(block_integral_quadrature(two, 0, {1, -1}, 128) - expect) < 1e-12);
}

TEST_CASE("coefficient assembly rejects bad requests") {
  const FunctionalSpec f = make_cubic({1.0});
  CHECK_THROWS_AS(coefficients(f, 0, 64), validation_error);
  CHECK_THROWS_AS(coefficients(f, 16, 64), validation_error);  // resolution too low
  CHECK_THROWS_AS(coefficients(make_linear({0.0}), 4, 32), validation_error);  // no blocks
  DomainSpec decay;
  decay.kind = DomainKind::decay;
  decay.N = 2;
  decay.decay_C = 0.5;
  decay.decay_exponent = 1.0;
  CHECK_THROWS_AS(coefficients(make_l2norm(decay), 4, 32), validation_error);  // non-separable
  CHECK_THROWS_AS(coefficients_cut(f, DomainSpec{}, 4, 32), validation_error);  // not cut kind
}

TEST_CASE("reconstruction from truncated tables") {
  const FourierTable c = coefficients(make_constant(3.0, 1), 2, 16);
  CoeffVector v;
  v.coeffs = {0.2};
  CHECK(reconstruct(c, v) == doctest::Approx(3.0).epsilon(1e-12));

  const FourierTable cb = coefficients(make_cubic({1.0}), 64, 512);
  CHECK(std::abs(reconstruct(cb, v) - 0.008) < 2e-3);

  const FourierTable ln = coefficients(make_linear({1.0}), 64, 512);
  v.coeffs = {0.25};
  CHECK(std::abs(reconstruct(ln, v) - 0.25) < 5e-3);
}

TEST_CASE("reconstruction error shrinks as the truncation grows") {
  const FunctionalSpec f = make_cubic({1.0, 0.5});
  const FourierTable coarse = coefficients(f, 8, 64);
  const FourierTable fine = coefficients(f, 32, 256);
  Rng rng(7);
  std::vector<double> err_coarse, err_fine;
  for (int s = 0; s < 21; ++s) {
    CoeffVector v;
    v.coeffs = {rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)};
    const double exact = f(v);
    err_coarse.push_back(std::abs(reconstruct(coarse, v) - exact));
    err_fine.push_back(std::abs(reconstruct(fine, v) - exact));
  }
  std::sort(err_coarse.begin(), err_coarse.end());
  std::sort(err_fine.begin(), err_fine.end());
  CHECK(err_fine[10] < err_coarse[10]);
}

TEST_CASE("reconstruct validates support range and realness") {
  const FourierTable t = coefficients(make_linear({0.5, 0.5}), 4, 32);
  CoeffVector v;
  v.coeffs = {0.1};  // table reads position 2
  CHECK_THROWS_AS(reconstruct(t, v), validation_error);

  FourierTable bad;
  bad.entries[MultiIndex{}] = {cplx(0.0, 1.0), cplx(0.0, 1.0), "closed-form"};
  v.coeffs = {0.1};
  CHECK_THROWS_AS(reconstruct(bad, v), numeric_error);
}

TEST_CASE("spectral norms on handcrafted tables") {
  FourierTable t;
  t.entries[MultiIndex{}] = {cplx(1.0, 0.0), cplx(1.0, 0.0), "closed-form"};
  CHECK(barron_norm(t, 2.0) == doctest::Approx(1.0));
  CHECK(hilbert_norm(t, 1.0) == doctest::Approx(1.0));

  t.entries[idx({{1, 1}})] = {cplx(0.5, 0.0), cplx(0.5, 0.0), "closed-form"};
  CHECK(barron_norm(t, 2.0) == doctest::Approx(21.239208802178716).epsilon(1e-15));
  CHECK(hilbert_norm(t, 1.0) == doctest::Approx(3.3346070834641612).epsilon(1e-15));

  const FourierTable empty;
  CHECK(barron_norm(empty, 2.0) == 0.0);
  CHECK(hilbert_norm(empty, 1.0) == 0.0);
}

TEST_CASE("hilbert inner product") {
  FourierTable a, b;
  a.entries[MultiIndex{}] = {cplx(1.0, 0.0), cplx(1.0, 0.0), "closed-form"};
  b.entries[MultiIndex{}] = {cplx(0.0, 2.0), cplx(0.0, 2.0), "closed-form"};
  CHECK(std::abs(hilbert_inner(a, b, 1.0) - cplx(0.0, 2.0)) < 1e-15);

  FourierTable c;
  c.entries[idx({{2, 1}})] = {cplx(1.0, 0.0), cplx(1.0, 0.0), "closed-form"};
  CHECK(std::abs(hilbert_inner(a, c, 1.0)) == 0.0);  // disjoint supports

  const FourierTable t = coefficients(make_cubic({1.0}), 8, 64);
  const cplx self = hilbert_inner(t, t, 1.0);
  CHECK(std::abs(self.imag()) < 1e-15);
  const double h = hilbert_norm(t, 1.0);
  CHECK(self.real() == doctest::Approx(h * h).epsilon(1e-12));

  const FourierTable u = coefficients(make_linear({0.3}), 8, 64);
  const cplx ab = hilbert_inner(t, u, 1.0);
  const cplx ba = hilbert_inner(u, t, 1.0);
  CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
}

TEST_CASE("smoothness-weighted l1 dominates the weighted l2 norm") {
  Rng rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    FourierTable t;
    const int n = 1 + static_cast<int>(rng.uniform(0.0, 12.0));
    for (int e = 0; e < n; ++e) {
      MultiIndex k;
      const int supp = static_cast<int>(rng.uniform(0.0, 3.5));
      for (int s = 0; s < supp; ++s) {
        const int pos = 1 + static_cast<int>(rng.uniform(0.0, 6.0));
        int val = static_cast<int>(rng.uniform(-8.0, 9.0));
        if (val == 0) val = 1;
        k.set(pos, val);
      }
      const cplx a(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
      t.entries[k] = {a, a, "quadrature"};
    }
    CHECK(hilbert_norm(t, 1.0) <= barron_norm(t, 2.0) * (1.0 + 1e-12) + 1e-300);
  }
}

TEST_CASE("weighted l2 norm matches an independent Simpson oracle") {
  const FourierTable t = coefficients(make_cubic({1.0}), 32, 256);
  auto f = [](double b) { return b * b * b; };
  double oracle = 0.0;
  for (int kappa = -32; kappa <= 32; ++kappa) {
    const cplx a = simpson_coeff(f, kappa, 8192);
    oracle += (1.0 + std::pow(2.0 * kPi * std::abs(kappa), 2.0)) * std::norm(a);
  }
  const double h = hilbert_norm(t, 1.0);
  CHECK(h * h == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("cut tables: head-only blocks match the plain table") {
  const FunctionalSpec f = make_cubic({1.0});
  const FourierTable plain = coefficients(f, 8, 64);
  const FourierTable cut = coefficients_cut(f, cut_domain(1, 0.1), 8, 64);
  CHECK(cut.cut);
  CHECK(cut.cut_N == 1);
  CHECK(cut.entries.size() == plain.entries.size());
  for (const auto& [k, e] : plain.entries) {
    const auto& ce = cut.entries.at(k);
    CHECK(ce.a == e.a);
    CHECK(ce.a_recon == e.a);
    CHECK(ce.provenance == "closed-form");
  }
}

TEST_CASE("cut tables: tail blocks integrate over the small box") {
  const FunctionalSpec f = make_linear({0.0, 1.0});  // reads position 2 only
  const FourierTable t = coefficients_cut(f, cut_domain(1, 0.1), 8, 64);
  CHECK(t.entries.size() == 17);
  const auto& e = t.entries.at(idx({{2, 1}}));
  CHECK(e.provenance == "quadrature");
  CHECK(std::abs(e.a.real()) < 1e-16);
  CHECK(std::abs(e.a.imag() - -0.014235250868343546) < 1e-14);
  // conjugate symmetry survives the tail phase convention
  CHECK(std::abs(t.entries.at(idx({{2, -1}})).a - std::conj(e.a)) < 1e-14);
  CHECK(std::abs(t.entries.at(MultiIndex{}).a) < 1e-15);  // odd integrand, quadrature residue
}

TEST_CASE("cut reconstruction tracks the functional on the cut domain") {
  const FunctionalSpec f = make_linear({0.0, 1.0});
  const DomainSpec dom = cut_domain(1, 0.1);
  const FourierTable t = coefficients_cut(f, dom, 32, 256);
  std::vector<double> errs;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const CoeffVector v = sample(dom, 2, 1000 + s);
    errs.push_back(std::abs(reconstruct(t, v) - f(v)));
  }
  std::sort(errs.begin(), errs.end());
  CHECK(errs[25] < 1e-2);
}
