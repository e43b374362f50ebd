#include "barron/function_space.hpp"

#include <cassert>
#include <cmath>

#include "barron/errors.hpp"
#include "barron/quadrature.hpp"
#include "barron/rng.hpp"

namespace barron {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;
const double kSqrt2 = std::sqrt(2.0);

void require_1d(const BasisSpec& b, const char* what) {
  if (b.spatial_dim != 1)
    throw validation_error(std::string(what) + ": spatial_dim > 1 is not implemented");
}
}  // namespace

int BasisSpec::frequency_band(int pos) const {
  if (pos < 1) throw validation_error("basis position must be >= 1");
  return kind == BasisKind::sine ? pos : (pos + 1) / 2;
}

double BasisSpec::eval_basis(int pos, double x) const {
  require_1d(*this, "eval_basis");
  const int n = frequency_band(pos);
  switch (kind) {
    case BasisKind::real_trigonometric:
      return (pos % 2 == 1) ? kSqrt2 * std::cos(kTwoPi * n * x)
                            : kSqrt2 * std::sin(kTwoPi * n * x);
    case BasisKind::sine:
      return kSqrt2 * std::sin(kPi * n * x);
    case BasisKind::complex_exponential:
      return (pos % 2 == 1) ? 2.0 * std::cos(kTwoPi * n * x)
                            : -2.0 * std::sin(kTwoPi * n * x);
  }
  return 0.0;
}

double BasisSpec::eval_basis_deriv2(int pos, double x) const {
  const int n = frequency_band(pos);
  const double omega = (kind == BasisKind::sine) ? kPi * n : kTwoPi * n;
  return -omega * omega * eval_basis(pos, x);
}

double BasisSpec::basis_norm_sq(int pos) const {
  return kind == BasisKind::complex_exponential ? 2.0 : 1.0;
}

std::string BasisSpec::kind_name() const {
  switch (kind) {
    case BasisKind::complex_exponential: return "complex-exponential";
    case BasisKind::real_trigonometric: return "real-trigonometric";
    case BasisKind::sine: return "sine";
  }
  return "?";
}

BasisKind BasisSpec::kind_from_name(const std::string& name) {
  if (name == "complex-exponential") return BasisKind::complex_exponential;
  if (name == "real-trigonometric") return BasisKind::real_trigonometric;
  if (name == "sine") return BasisKind::sine;
  throw validation_error("unknown basis kind: " + name);
}

nlohmann::json BasisSpec::to_json() const {
  return {{"kind", kind_name()}, {"spatial_dim", spatial_dim}};
}

nlohmann::json CoeffVector::to_json() const {
  return {{"basis", basis.to_json()}, {"coeffs", coeffs}};
}

void DomainSpec::validate() const {
  switch (kind) {
    case DomainKind::bound:
      break;
    case DomainKind::cut:
      if (N < 1) throw validation_error("cut domain: N must be >= 1");
      if (!(delta > 0.0) || !(delta < 0.5))
        throw validation_error("cut domain: delta must satisfy 0 < delta < 1/2");
      break;
    case DomainKind::decay:
      if (!(decay_C > 0.0)) throw validation_error("decay domain: C must be > 0");
      if (!(decay_exponent > 0.0))
        throw validation_error("decay domain: exponent must be > 0");
      break;
  }
}

double DomainSpec::half_width(int pos) const {
  switch (kind) {
    case DomainKind::bound: return 0.5;
    case DomainKind::cut: return pos <= N ? 0.5 : delta;
    case DomainKind::decay: return decay_C * std::pow(pos, -decay_exponent);
  }
  return 0.5;
}

std::string DomainSpec::kind_name() const {
  switch (kind) {
    case DomainKind::bound: return "bound";
    case DomainKind::cut: return "cut";
    case DomainKind::decay: return "decay";
  }
  return "?";
}

nlohmann::json DomainSpec::to_json() const {
  nlohmann::json j{{"kind", kind_name()}};
  if (kind == DomainKind::cut) {
    j["N"] = N;
    j["delta"] = delta;
  } else if (kind == DomainKind::decay) {
    j["decay_C"] = decay_C;
    j["decay_exponent"] = decay_exponent;
  }
  return j;
}

CoeffVector sample(const DomainSpec& domain, int n_coeffs, std::uint64_t seed,
                   const BasisSpec& basis) {
  domain.validate();
  if (n_coeffs < 1) throw validation_error("sample: n_coeffs must be >= 1");
  if (domain.kind == DomainKind::cut && n_coeffs < domain.N)
    throw validation_error("sample: cut domain needs n_coeffs >= N");
  CoeffVector v;
  v.basis = basis;
  v.coeffs.resize(n_coeffs);
  Rng rng(seed);
  for (int i = 1; i <= n_coeffs; ++i) {
    const double B = domain.half_width(i);
    const double b = rng.uniform(-B, B);
    assert(std::abs(b) < B || B == 0.0);
    v.coeffs[i - 1] = b;
  }
  return v;
}

double evaluate(const CoeffVector& v, double x) {
  require_1d(v.basis, "evaluate");
  double out = 0.0;
  for (int i = 1; i <= v.size(); ++i)
    out += v.coeffs[i - 1] * v.basis.eval_basis(i, x);
  return out;
}

CoeffVector extract_coeffs(const std::function<double(double)>& g,
                           const BasisSpec& basis, int n_coeffs, int quad_points) {
  require_1d(basis, "extract_coeffs");
  if (n_coeffs < 1) throw validation_error("extract_coeffs: n_coeffs must be >= 1");
  const int max_band = basis.frequency_band(n_coeffs);
  if (quad_points < 4 * max_band)
    throw validation_error("extract_coeffs: quadrature resolution insufficient, need quad_points >= 4 * max frequency");
  const QuadRule q = composite_gauss(0.0, 1.0, quad_points);
  std::vector<double> gv(q.x.size());
  for (std::size_t i = 0; i < q.x.size(); ++i) gv[i] = g(q.x[i]);
  CoeffVector v;
  v.basis = basis;
  v.coeffs.resize(n_coeffs);
  for (int pos = 1; pos <= n_coeffs; ++pos) {
    double acc = 0.0;
    for (std::size_t i = 0; i < q.x.size(); ++i)
      acc += q.w[i] * gv[i] * basis.eval_basis(pos, q.x[i]);
    v.coeffs[pos - 1] = acc / basis.basis_norm_sq(pos);
  }
  return v;
}

}  // namespace barron
