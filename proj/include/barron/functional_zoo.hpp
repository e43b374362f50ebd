#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "barron/function_space.hpp"

namespace barron {

// A concrete target functional: exact evaluator plus the decomposition
// structure {D_j} that makes its Fourier coefficients computable block by
// block. block_eval(j, b) evaluates the j-th piece on the coordinates of
// D_j (in sorted order). closed_form, when set, supplies the exact block
// integral over (-1/2,1/2)^{|D_j|} against exp(-2 pi i kappa . b).
struct FunctionalSpec {
  std::string name;
  int input_dim = 0;  // number of leading coefficient positions read
  std::vector<std::vector<int>> structure;  // 1-based, sorted, nonempty blocks
  std::function<double(const std::vector<double>&)> evaluate;
  std::function<double(int, const std::vector<double>&)> block_eval;
  std::function<bool(int, const std::vector<int>&, std::complex<double>&)> closed_form;
  bool separable = true;  // false: no usable finite-dimensional decomposition
  DomainSpec domain;
  BasisSpec basis;
  std::map<std::string, double> params;
  std::vector<double> weights;

  double operator()(const CoeffVector& v) const { return evaluate(v.coeffs); }
};

// f(v) = sum c_i b_i, singleton blocks per nonzero weight.
FunctionalSpec make_linear(const std::vector<double>& c);

// f(v) = sum s_i b_i^3.
FunctionalSpec make_cubic(const std::vector<double>& s);

// f(v) = sum s_i b_i b_{i+1}, overlapping pair blocks {i, i+1}.
FunctionalSpec make_bilinear(const std::vector<double>& s);

// Dirichlet energy of v on the real-trigonometric basis:
// E(v) = int_0^1 (alpha/2) v'(x)^2 dx = sum_i 2 pi^2 alpha n(i)^2 b_i^2.
// Requires a decay domain with exponent > 3/2 so the full series converges;
// the truncation reads domain.N coefficient positions.
FunctionalSpec make_energy(double alpha, const DomainSpec& decay_domain);

// f(v) = sqrt(sum b_i^2) (orthonormal basis); decay exponent > 1/2.
// Non-separable: the square root couples all coordinates, so no coefficient
// table can be requested for it.
FunctionalSpec make_l2norm(const DomainSpec& decay_domain);

// f(v) = value for every v.
FunctionalSpec make_constant(double value, int input_dim);

// CLI factory: name + JSON parameter map.
FunctionalSpec make_functional(const std::string& name, const nlohmann::json& params);

}  // namespace barron
