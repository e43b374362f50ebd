#pragma once

#include <complex>
#include <map>
#include <string>

#include "json.hpp"

#include "barron/functional_zoo.hpp"
#include "barron/multi_index.hpp"

namespace barron {

// Truncated table of functional Fourier coefficients a_k. For cut-domain
// tables, `a` carries the coefficient with the orthonormal (2 delta)^{-1/2}
// normalization per truncated block dimension (the convention under which
// Parseval holds against plain Lebesgue integrals over the box), while
// `a_recon` additionally folds in the constant basis value of truncated
// dimensions whose kappa component is zero, so that reconstruct() can apply
// per-entry factors based on the index support alone.
struct FourierTable {
  struct Entry {
    std::complex<double> a{0.0, 0.0};
    std::complex<double> a_recon{0.0, 0.0};
    std::string provenance;  // "closed-form" | "quadrature"
  };
  std::map<MultiIndex, Entry> entries;
  double s_barron = 2.0;
  double s_hilbert = 1.0;
  bool cut = false;
  int cut_N = 0;
  double cut_delta = 0.0;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

// a_k = sum_{j in A_k} int_{(-1/2,1/2)^{|D_j|}} f_j(b) prod exp(-2 pi i k_i b_i) db,
// for all k supported on some block with |k_i| <= max_linf. Every enumerated
// entry is stored, including exact zeros.
FourierTable coefficients(const FunctionalSpec& f, int max_linf, int quad_points);

// Cut-domain variant: block dimensions beyond domain.N integrate over
// (-delta, delta) against exp(-(pi/delta) i k_i b_i) with a
// (2 delta)^{-tail/2} block prefactor.
FourierTable coefficients_cut(const FunctionalSpec& f, const DomainSpec& cut_domain,
                              int max_linf, int quad_points);

// Re sum a_k e_k(v); throws numeric_error if the imaginary residue exceeds
// 1e-8 (real functionals must reconstruct real).
double reconstruct(const FourierTable& table, const CoeffVector& v);

// sum (1 + (2 pi)^s |k|_1^s) |a_k|
double barron_norm(const FourierTable& table, double s);

// sqrt( sum (1 + (2 pi)^{2s} |k|_1^{2s}) |a_k|^2 )
double hilbert_norm(const FourierTable& table, double s);

// sum (1 + (2 pi)^{2s} |k|_1^{2s}) conj(a_k(A)) a_k(B) over the support union
std::complex<double> hilbert_inner(const FourierTable& ta, const FourierTable& tb, double s);

// Single-block integral by tensor-product Gauss-Legendre quadrature,
// bypassing any registered closed form (cross-check oracle access).
std::complex<double> block_integral_quadrature(const FunctionalSpec& f, int block,
                                               const std::vector<int>& kappa,
                                               int quad_points);

}  // namespace barron
