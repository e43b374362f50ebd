#include "barron/pde_app.hpp"

#include <algorithm>
#include <cmath>

#include "barron/errors.hpp"
#include "barron/experiments.hpp"
#include "barron/io_util.hpp"
#include "barron/quadrature.hpp"
#include "barron/rng.hpp"

namespace barron {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

const char* variant_name(PoissonVariant v) {
  return v == PoissonVariant::periodic_zero_mean ? "periodic-zero-mean" : "dirichlet-sine";
}

PoissonVariant variant_from_name(const std::string& name) {
  if (name == "periodic-zero-mean") return PoissonVariant::periodic_zero_mean;
  if (name == "dirichlet-sine") return PoissonVariant::dirichlet_sine;
  throw validation_error("unknown problem variant: " + name);
}

void PoissonProblem::validate() const {
  if (!(alpha > 0.0)) throw validation_error("diffusion coefficient must be positive");
  if (n_modes < 1) throw validation_error("mode count must be positive");
}

BasisSpec PoissonProblem::basis() const {
  BasisSpec b;
  b.kind = variant == PoissonVariant::periodic_zero_mean ? BasisKind::real_trigonometric
                                                         : BasisKind::sine;
  b.spatial_dim = 1;
  return b;
}

int PoissonProblem::n_coeffs() const {
  return variant == PoissonVariant::periodic_zero_mean ? 2 * n_modes : n_modes;
}

double PoissonProblem::symbol(int band) const {
  const double omega = variant == PoissonVariant::periodic_zero_mean ? 2.0 * kPi * band
                                                                     : kPi * band;
  return alpha * omega * omega;
}

PoissonProblem PoissonProblem::from_json(const nlohmann::json& j) {
  PoissonProblem p;
  p.variant = variant_from_name(j.at("variant").get<std::string>());
  p.alpha = j.at("alpha").get<double>();
  p.n_modes = j.at("n_modes").get<int>();
  p.validate();
  return p;
}

nlohmann::json PoissonProblem::to_json() const {
  return {{"variant", variant_name(variant)}, {"alpha", alpha}, {"n_modes", n_modes}};
}

namespace {

// The zero-mean trigonometric and sine bases carry no constant mode, so the
// periodic compatibility question reduces to the basis kind.
void check_basis(const PoissonProblem& problem, const BasisSpec& basis) {
  if (basis.spatial_dim != 1) throw validation_error("solver handles spatial dimension 1 only");
  if (problem.variant == PoissonVariant::periodic_zero_mean) {
    if (basis.kind == BasisKind::sine)
      throw validation_error("periodic variant needs the trigonometric or exponential basis");
  } else if (basis.kind != BasisKind::sine) {
    throw validation_error("Dirichlet variant needs the sine basis");
  }
}

}  // namespace

CoeffVector solution_coeffs(const PoissonProblem& problem, const CoeffVector& g) {
  problem.validate();
  check_basis(problem, g.basis);
  CoeffVector u;
  u.basis = g.basis;
  u.coeffs.resize(g.coeffs.size());
  for (int pos = 1; pos <= g.size(); ++pos) {
    const int band = g.basis.frequency_band(pos);
    if (band > problem.n_modes)
      throw validation_error("right-hand side exceeds the solver's mode budget");
    u.coeffs[static_cast<std::size_t>(pos - 1)] =
        g.coeffs[static_cast<std::size_t>(pos - 1)] / problem.symbol(band);
  }
  return u;
}

double solve_at(const PoissonProblem& problem, const CoeffVector& g, double x0) {
  return evaluate(solution_coeffs(problem, g), x0);
}

double oracle_residual(const PoissonProblem& problem, const CoeffVector& g, int quad_points) {
  const CoeffVector u = solution_coeffs(problem, g);
  const QuadRule rule = composite_gauss(0.0, 1.0, quad_points);
  double res = 0.0, g_sq = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double x = rule.x[q];
    double lap = 0.0, gx = 0.0;
    for (int pos = 1; pos <= g.size(); ++pos) {
      lap += u.coeffs[static_cast<std::size_t>(pos - 1)] * g.basis.eval_basis_deriv2(pos, x);
      gx += g.coeffs[static_cast<std::size_t>(pos - 1)] * g.basis.eval_basis(pos, x);
    }
    const double r = -problem.alpha * lap - gx;
    res += rule.w[q] * std::abs(r);
    g_sq += rule.w[q] * gx * gx;
  }
  const double g_norm = std::sqrt(g_sq);
  return g_norm > 0.0 ? res / g_norm : res;
}

PointDataset generate_dataset(const PoissonProblem& problem, const DomainSpec& domain, double x0,
                              int M, std::uint64_t seed) {
  problem.validate();
  domain.validate();
  if (!(x0 > 0.0) || !(x0 < 1.0)) throw validation_error("evaluation point must lie in (0, 1)");
  if (M < 1) throw validation_error("sample count must be positive");
  PointDataset ds;
  ds.x0 = x0;
  ds.basis = problem.basis();
  ds.data.dim = problem.n_coeffs();
  for (int s = 0; s < M; ++s) {
    CoeffVector g = sample(domain, problem.n_coeffs(), mix_seed(seed, static_cast<std::uint64_t>(s)),
                           ds.basis);
    ds.data.add(g.coeffs, solve_at(problem, g, x0));
  }
  return ds;
}

std::string point_dataset_csv(const PointDataset& ds) {
  std::vector<std::string> header;
  for (int i = 1; i <= ds.data.dim; ++i) header.push_back("b_" + std::to_string(i));
  header.push_back("u");
  std::string out = csv_row(header);
  for (int i = 0; i < ds.data.size(); ++i) {
    std::vector<std::string> cells;
    const double* row = ds.data.row(i);
    for (int j = 0; j < ds.data.dim; ++j) cells.push_back(fmt_g17(row[j]));
    cells.push_back(fmt_g17(ds.data.y[static_cast<std::size_t>(i)]));
    out += csv_row(cells);
  }
  return out;
}

LearnResult learn_pointwise(const PointDataset& ds, int net_width, const TrainConfig& cfg) {
  if (ds.size() < 2) throw validation_error("need at least two samples to split");
  if (net_width < 1) throw validation_error("net width must be positive");
  const int n_test = std::max(1, ds.size() / 5);
  const int n_train = ds.size() - n_test;

  Dataset train_data, test_data;
  train_data.dim = test_data.dim = ds.data.dim;
  for (int i = 0; i < ds.size(); ++i) {
    const double* row = ds.data.row(i);
    std::vector<double> x(row, row + ds.data.dim);
    (i < n_train ? train_data : test_data).add(x, ds.data.y[static_cast<std::size_t>(i)]);
  }

  ShallowNet net = init_net(NetForm::dense, ds.data.dim, net_width, mix_seed(cfg.seed, 97),
                            train_data.label_mean(), cfg.init_scale);
  TrainResult res = train(std::move(net), train_data, cfg);

  LearnResult out;
  out.train_rmse = rmse(res.net, train_data);
  out.test_rmse = rmse(res.net, test_data);
  out.label_rms = test_data.label_rms();
  out.net = std::move(res.net);
  return out;
}

GridDataset generate_grid_dataset(const PoissonProblem& problem, const DomainSpec& domain,
                                  const std::vector<double>& grid, int M, std::uint64_t seed) {
  problem.validate();
  domain.validate();
  if (grid.empty()) throw validation_error("grid must be nonempty");
  for (std::size_t q = 0; q < grid.size(); ++q) {
    if (!(grid[q] > 0.0) || !(grid[q] < 1.0))
      throw validation_error("grid points must lie in (0, 1)");
    if (q > 0 && !(grid[q] > grid[q - 1]))
      throw validation_error("grid points must be strictly increasing");
  }
  if (M < 1) throw validation_error("sample count must be positive");

  GridDataset ds;
  ds.grid = grid;
  ds.basis = problem.basis();
  ds.dim = problem.n_coeffs();
  ds.X.reserve(static_cast<std::size_t>(M) * static_cast<std::size_t>(ds.dim));
  ds.labels.reserve(static_cast<std::size_t>(M));
  for (int s = 0; s < M; ++s) {
    CoeffVector g = sample(domain, ds.dim, mix_seed(seed, static_cast<std::uint64_t>(s)), ds.basis);
    const CoeffVector u = solution_coeffs(problem, g);
    std::vector<double> row(grid.size());
    for (std::size_t q = 0; q < grid.size(); ++q) row[q] = evaluate(u, grid[q]);
    ds.X.insert(ds.X.end(), g.coeffs.begin(), g.coeffs.end());
    ds.labels.push_back(std::move(row));
  }
  return ds;
}

std::string grid_dataset_csv(const GridDataset& ds) {
  std::vector<std::string> header;
  for (int i = 1; i <= ds.dim; ++i) header.push_back("b_" + std::to_string(i));
  for (std::size_t q = 0; q < ds.grid.size(); ++q) header.push_back("u_" + std::to_string(q));
  std::string out = csv_row(header);
  for (int i = 0; i < ds.size(); ++i) {
    std::vector<std::string> cells;
    const double* row = ds.row(i);
    for (int j = 0; j < ds.dim; ++j) cells.push_back(fmt_g17(row[j]));
    for (double u : ds.labels[static_cast<std::size_t>(i)]) cells.push_back(fmt_g17(u));
    out += csv_row(cells);
  }
  return out;
}

nlohmann::json GridOperator::to_json() const {
  nlohmann::json j;
  j["grid"] = grid;
  nlohmann::json jnets = nlohmann::json::array();
  for (const auto& net : nets) jnets.push_back(net.to_json());
  j["nets"] = std::move(jnets);
  j["test_rmse"] = test_rmse;
  return j;
}

GridOperator GridOperator::from_json(const nlohmann::json& j) {
  GridOperator op;
  op.grid = j.at("grid").get<std::vector<double>>();
  for (const auto& jn : j.at("nets")) op.nets.push_back(ShallowNet::from_json(jn));
  op.test_rmse = j.at("test_rmse").get<std::vector<double>>();
  if (op.nets.size() != op.grid.size())
    throw validation_error("grid operator needs one net per grid point");
  return op;
}

GridOperator build_grid_operator(const PoissonProblem& problem, const DomainSpec& domain,
                                 const std::vector<double>& grid, int M, int net_width,
                                 const TrainConfig& cfg, int jobs) {
  const GridDataset ds = generate_grid_dataset(problem, domain, grid, M, cfg.seed);

  GridOperator op;
  op.grid = ds.grid;
  op.nets.resize(ds.grid.size());
  op.test_rmse.assign(ds.grid.size(), 0.0);

  parallel_for(jobs, static_cast<int>(ds.grid.size()), [&](int q) {
    PointDataset point;
    point.x0 = ds.grid[static_cast<std::size_t>(q)];
    point.basis = ds.basis;
    point.data.dim = ds.dim;
    for (int i = 0; i < ds.size(); ++i) {
      const double* row = ds.row(i);
      point.data.add(std::vector<double>(row, row + ds.dim),
                     ds.labels[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)]);
    }
    TrainConfig tc = cfg;
    tc.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(q) + 1);
    try {
      LearnResult res = learn_pointwise(point, net_width, tc);
      op.nets[static_cast<std::size_t>(q)] = std::move(res.net);
      op.test_rmse[static_cast<std::size_t>(q)] = res.test_rmse;
    } catch (const numeric_error& e) {
      throw numeric_error("grid point y=" + fmt_g17(ds.grid[static_cast<std::size_t>(q)]) + ": " +
                          e.what());
    }
  });
  return op;
}

double apply_grid_operator(const GridOperator& op, const CoeffVector& g, double y) {
  if (op.grid.empty() || op.nets.size() != op.grid.size())
    throw validation_error("grid operator has no trained nets");
  if (!(y >= op.grid.front()) || !(y <= op.grid.back()))
    throw validation_error("query point outside the operator grid");
  const auto it = std::lower_bound(op.grid.begin(), op.grid.end(), y);
  const std::size_t hi = static_cast<std::size_t>(it - op.grid.begin());
  if (hi < op.grid.size() && op.grid[hi] == y)
    return op.nets[hi].forward(g.coeffs);
  const std::size_t lo = hi - 1;
  const double t = (y - op.grid[lo]) / (op.grid[hi] - op.grid[lo]);
  return (1.0 - t) * op.nets[lo].forward(g.coeffs) + t * op.nets[hi].forward(g.coeffs);
}

}  // namespace barron
