#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace barron {

// Coefficient-position conventions (1-based positions, spatial dim 1):
//   real_trigonometric: position 2n-1 -> sqrt(2) cos(2 pi n x),
//                       position 2n   -> sqrt(2) sin(2 pi n x)   (orthonormal)
//   sine:               position n    -> sqrt(2) sin(pi n x)     (orthonormal)
//   complex_exponential: conjugate-symmetric pairs; position 2n-1 holds
//                       Re(b_n) with shape 2 cos(2 pi n x), position 2n holds
//                       Im(b_n) with shape -2 sin(2 pi n x)
enum class BasisKind { complex_exponential, real_trigonometric, sine };

struct BasisSpec {
  BasisKind kind = BasisKind::real_trigonometric;
  int spatial_dim = 1;

  // Frequency band n owning a coefficient position.
  int frequency_band(int pos) const;
  double eval_basis(int pos, double x) const;
  // Second spatial derivative of the same basis function (Poisson residuals).
  double eval_basis_deriv2(int pos, double x) const;
  // Squared L2(0,1) norm of the basis function (projection denominator).
  double basis_norm_sq(int pos) const;

  std::string kind_name() const;
  static BasisKind kind_from_name(const std::string& name);
  nlohmann::json to_json() const;
};

struct CoeffVector {
  std::vector<double> coeffs;  // b_1 .. b_N, position i at coeffs[i-1]
  BasisSpec basis;

  int size() const { return static_cast<int>(coeffs.size()); }
  nlohmann::json to_json() const;
};

enum class DomainKind { bound, cut, decay };

// bound: every coordinate uniform in (-1/2, 1/2).
// cut:   coordinates i <= N as bound, i > N confined to (-delta, delta).
// decay: |b_n| < decay_C * n^(-decay_exponent).
struct DomainSpec {
  DomainKind kind = DomainKind::bound;
  int N = 0;
  double delta = 0.0;
  double decay_C = 0.0;
  double decay_exponent = 0.0;

  void validate() const;
  double half_width(int pos) const;
  std::string kind_name() const;
  nlohmann::json to_json() const;
};

CoeffVector sample(const DomainSpec& domain, int n_coeffs, std::uint64_t seed,
                   const BasisSpec& basis = {});

double evaluate(const CoeffVector& v, double x);

CoeffVector extract_coeffs(const std::function<double(double)>& g,
                           const BasisSpec& basis, int n_coeffs, int quad_points);

}  // namespace barron
