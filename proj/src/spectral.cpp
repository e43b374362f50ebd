#include "barron/spectral.hpp"

#include <cmath>

#include "barron/errors.hpp"
#include "barron/io_util.hpp"
#include "barron/quadrature.hpp"

namespace barron {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

struct DimRule {
  QuadRule q;
  double freq;  // phase = -freq * kappa * b
  bool tail;
};

void validate_blocks(const FunctionalSpec& f) {
  if (!f.separable)
    throw validation_error("coefficients: functional '" + f.name +
                           "' has no separable finite-dimensional decomposition");
  if (f.structure.empty())
    throw validation_error("coefficients: functional '" + f.name + "' declares no structure blocks");
  for (const auto& blk : f.structure) {
    if (blk.empty()) throw validation_error("coefficients: empty structure block");
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (blk[i] < 1) throw validation_error("coefficients: block positions are 1-based");
      if (i > 0 && blk[i] <= blk[i - 1])
        throw validation_error("coefficients: block positions must be sorted and distinct");
    }
  }
}

// Contract the tensor of f-values against per-dimension phase tables,
// one axis at a time; returns the (2L+1)^d array of block integrals in
// row-major kappa order (kappa_i = index - L, first dimension slowest).
std::vector<std::complex<double>> contract_block(
    const std::vector<std::complex<double>>& fvals, const std::vector<DimRule>& dims,
    int max_linf) {
  const int nk = 2 * max_linf + 1;
  const int d = static_cast<int>(dims.size());
  std::vector<std::complex<double>> cur = fvals;
  std::size_t lead = 1;
  for (int i = 0; i < d - 1; ++i) lead *= dims[i].q.size();
  std::size_t trail = 1;
  for (int dd = d - 1; dd >= 0; --dd) {
    const int nq = dims[dd].q.size();
    // E[kappa][node] = w * exp(-i freq kappa x)
    std::vector<std::complex<double>> E(static_cast<std::size_t>(nk) * nq);
    for (int ki = 0; ki < nk; ++ki) {
      const int kappa = ki - max_linf;
      for (int qi = 0; qi < nq; ++qi)
        E[static_cast<std::size_t>(ki) * nq + qi] =
            dims[dd].q.w[qi] * std::polar(1.0, -dims[dd].freq * kappa * dims[dd].q.x[qi]);
    }
    std::vector<std::complex<double>> next(lead * nk * trail);
    for (std::size_t l = 0; l < lead; ++l)
      for (int ki = 0; ki < nk; ++ki)
        for (std::size_t t = 0; t < trail; ++t) {
          std::complex<double> acc{0.0, 0.0};
          const std::complex<double>* src = &cur[(l * nq) * trail + t];
          const std::complex<double>* e = &E[static_cast<std::size_t>(ki) * nq];
          for (int qi = 0; qi < nq; ++qi) acc += e[qi] * src[static_cast<std::size_t>(qi) * trail];
          next[(l * nk + ki) * trail + t] = acc;
        }
    cur.swap(next);
    trail *= nk;
    if (dd > 0) lead /= dims[dd - 1].q.size();
  }
  return cur;
}

FourierTable assemble(const FunctionalSpec& f, int max_linf, int quad_points,
                      const DomainSpec* cut_domain) {
  validate_blocks(f);
  if (max_linf < 1) throw validation_error("coefficients: max_linf must be >= 1");
  if (quad_points < 8 * max_linf)
    throw validation_error("coefficients: quadrature resolution too low, need quad_points >= 8 * max_linf");
  if (cut_domain) {
    if (cut_domain->kind != DomainKind::cut)
      throw validation_error("coefficients_cut: domain must be of cut kind");
    cut_domain->validate();
  }

  FourierTable table;
  if (cut_domain) {
    table.cut = true;
    table.cut_N = cut_domain->N;
    table.cut_delta = cut_domain->delta;
  }
  const int nk = 2 * max_linf + 1;

  for (int j = 0; j < static_cast<int>(f.structure.size()); ++j) {
    const std::vector<int>& blk = f.structure[j];
    const int d = static_cast<int>(blk.size());

    std::vector<DimRule> dims(d);
    int tail_dims = 0;
    for (int i = 0; i < d; ++i) {
      const bool tail = cut_domain && blk[i] > cut_domain->N;
      const double half = tail ? cut_domain->delta : 0.5;
      dims[i].q = composite_gauss(-half, half, quad_points);
      dims[i].freq = tail ? kPi / cut_domain->delta : kTwoPi;
      dims[i].tail = tail;
      if (tail) ++tail_dims;
    }
    const double pref =
        tail_dims > 0 ? std::pow(2.0 * cut_domain->delta, -0.5 * tail_dims) : 1.0;

    // closed forms cover plain (-1/2,1/2) blocks only
    const bool use_closed = static_cast<bool>(f.closed_form) && tail_dims == 0;

    std::vector<std::complex<double>> integrals;
    if (!use_closed) {
      std::size_t total = 1;
      for (const auto& dim : dims) total *= dim.q.size();
      std::vector<std::complex<double>> fvals(total);
      std::vector<int> idx(d, 0);
      std::vector<double> b(d);
      for (std::size_t flat = 0; flat < total; ++flat) {
        for (int i = 0; i < d; ++i) b[i] = dims[i].q.x[idx[i]];
        fvals[flat] = f.block_eval(j, b);
        for (int i = d - 1; i >= 0; --i) {
          if (++idx[i] < dims[i].q.size()) break;
          idx[i] = 0;
        }
      }
      integrals = contract_block(fvals, dims, max_linf);
    }

    // walk kappa tuples in the same row-major order as contract_block output
    std::size_t nkd = 1;
    for (int i = 0; i < d; ++i) nkd *= nk;
    std::vector<int> kappa(d);
    for (std::size_t flat = 0; flat < nkd; ++flat) {
      std::size_t rem = flat;
      for (int i = d - 1; i >= 0; --i) {
        kappa[i] = static_cast<int>(rem % nk) - max_linf;
        rem /= nk;
      }
      std::complex<double> val;
      std::string prov;
      if (use_closed) {
        if (!f.closed_form(j, kappa, val))
          val = block_integral_quadrature(f, j, kappa, quad_points), prov = "quadrature";
        else
          prov = "closed-form";
      } else {
        val = integrals[flat];
        prov = "quadrature";
      }
      if (!std::isfinite(val.real()) || !std::isfinite(val.imag()))
        throw numeric_error("coefficients: non-finite block integral in block " + std::to_string(j));

      int zero_tail = 0;
      MultiIndex k;
      for (int i = 0; i < d; ++i) {
        if (kappa[i] != 0)
          k.set(blk[i], kappa[i]);
        else if (dims[i].tail)
          ++zero_tail;
      }
      const std::complex<double> contrib = pref * val;
      const double fold =
          zero_tail > 0 ? std::pow(2.0 * cut_domain->delta, -0.5 * zero_tail) : 1.0;
      auto [it, inserted] = table.entries.try_emplace(k);
      it->second.a += contrib;
      it->second.a_recon += contrib * fold;
      if (inserted)
        it->second.provenance = prov;
      else if (it->second.provenance != prov)
        it->second.provenance = "quadrature";
    }
  }
  return table;
}
}  // namespace

std::complex<double> block_integral_quadrature(const FunctionalSpec& f, int block,
                                               const std::vector<int>& kappa,
                                               int quad_points) {
  validate_blocks(f);
  if (block < 0 || block >= static_cast<int>(f.structure.size()))
    throw validation_error("block_integral_quadrature: block out of range");
  const std::vector<int>& blk = f.structure[block];
  const int d = static_cast<int>(blk.size());
  if (static_cast<int>(kappa.size()) != d)
    throw validation_error("block_integral_quadrature: kappa length must match block size");
  const QuadRule q = composite_gauss(-0.5, 0.5, quad_points);
  const int nq = q.size();
  std::vector<int> idx(d, 0);
  std::vector<double> b(d);
  std::complex<double> acc{0.0, 0.0};
  for (;;) {
    double wprod = 1.0, phase = 0.0;
    for (int i = 0; i < d; ++i) {
      b[i] = q.x[idx[i]];
      wprod *= q.w[idx[i]];
      phase += kappa[i] * b[i];
    }
    acc += wprod * f.block_eval(block, b) * std::polar(1.0, -kTwoPi * phase);
    int i = d - 1;
    while (i >= 0) {
      if (++idx[i] < nq) break;
      idx[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return acc;
}

FourierTable coefficients(const FunctionalSpec& f, int max_linf, int quad_points) {
  return assemble(f, max_linf, quad_points, nullptr);
}

FourierTable coefficients_cut(const FunctionalSpec& f, const DomainSpec& cut_domain,
                              int max_linf, int quad_points) {
  return assemble(f, max_linf, quad_points, &cut_domain);
}

double reconstruct(const FourierTable& table, const CoeffVector& v) {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [k, e] : table.entries) {
    if (k.max_support() > v.size())
      throw validation_error("reconstruct: table index support exceeds coefficient range");
    if (!table.cut) {
      sum += e.a * basis_eval(k, v);
    } else {
      double phase = 0.0;
      int tail_supp = 0;
      for (const auto& [pos, val] : k.entries()) {
        if (pos <= table.cut_N) {
          phase += kTwoPi * val * v.coeffs[pos - 1];
        } else {
          phase += (kPi / table.cut_delta) * val * v.coeffs[pos - 1];
          ++tail_supp;
        }
      }
      const double factor =
          tail_supp > 0 ? std::pow(2.0 * table.cut_delta, -0.5 * tail_supp) : 1.0;
      sum += e.a_recon * factor * std::polar(1.0, phase);
    }
  }
  if (std::abs(sum.imag()) >= 1e-8)
    throw numeric_error("reconstruct: imaginary residue " + fmt_g17(sum.imag()) +
                        " exceeds 1e-8; coefficient table is inconsistent");
  return sum.real();
}

double barron_norm(const FourierTable& table, double s) {
  double acc = 0.0;
  for (const auto& [k, e] : table.entries)
    acc += (1.0 + std::pow(kTwoPi * k.l1_norm(), s)) * std::abs(e.a);
  return acc;
}

double hilbert_norm(const FourierTable& table, double s) {
  double acc = 0.0;
  for (const auto& [k, e] : table.entries)
    acc += (1.0 + std::pow(kTwoPi * k.l1_norm(), 2.0 * s)) * std::norm(e.a);
  return std::sqrt(acc);
}

std::complex<double> hilbert_inner(const FourierTable& ta, const FourierTable& tb, double s) {
  std::complex<double> acc{0.0, 0.0};
  auto ia = ta.entries.begin();
  auto ib = tb.entries.begin();
  while (ia != ta.entries.end() && ib != tb.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      const double w = 1.0 + std::pow(kTwoPi * ia->first.l1_norm(), 2.0 * s);
      acc += w * std::conj(ia->second.a) * ib->second.a;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

nlohmann::json FourierTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [k, e] : entries)
    rows.push_back({k.to_json(), e.a.real(), e.a.imag(), e.provenance});
  nlohmann::json j{{"s_barron", s_barron}, {"s_hilbert", s_hilbert}, {"entries", rows}};
  if (cut) {
    j["cut"] = {{"N", cut_N}, {"delta", cut_delta}};
  }
  return j;
}

std::string FourierTable::to_csv() const {
  std::string out = "multi_index,re,im,provenance\n";
  for (const auto& [k, e] : entries) {
    std::string ks;
    for (const auto& [pos, val] : k.entries()) {
      if (!ks.empty()) ks += ';';
      ks += std::to_string(pos) + ":" + std::to_string(val);
    }
    out += csv_row({ks, fmt_g17(e.a.real()), fmt_g17(e.a.imag()), e.provenance});
  }
  return out;
}

}  // namespace barron
