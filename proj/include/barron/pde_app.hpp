#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "barron/function_space.hpp"
#include "barron/shallow_net.hpp"

namespace barron {

// -alpha u'' = g on (0,1), inverted mode by mode. The periodic variant works
// in the zero-mean trigonometric basis (symbol alpha (2 pi n)^2); the
// Dirichlet variant works in the sine basis (symbol alpha (pi n)^2).
enum class PoissonVariant { periodic_zero_mean, dirichlet_sine };

struct PoissonProblem {
  PoissonVariant variant = PoissonVariant::periodic_zero_mean;
  double alpha = 1.0;
  int n_modes = 0;

  void validate() const;
  BasisSpec basis() const;
  int n_coeffs() const;  // coefficients per right-hand side
  double symbol(int band) const;
  static PoissonProblem from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

const char* variant_name(PoissonVariant v);
PoissonVariant variant_from_name(const std::string& name);

// u(x0) for the band-limited right-hand side g; exact up to round-off.
double solve_at(const PoissonProblem& problem, const CoeffVector& g, double x0);

// The full coefficient vector of u (same basis as g).
CoeffVector solution_coeffs(const PoissonProblem& problem, const CoeffVector& g);

// Quadrature of |-alpha u'' - g| over (0,1) relative to ||g||_2; the oracle
// self-check.
double oracle_residual(const PoissonProblem& problem, const CoeffVector& g, int quad_points = 512);

struct PointDataset {
  double x0 = 0.0;
  BasisSpec basis;
  Dataset data;  // rows: g coefficients; labels: u(x0)
  int size() const { return data.size(); }
};

PointDataset generate_dataset(const PoissonProblem& problem, const DomainSpec& domain, double x0,
                              int M, std::uint64_t seed);

std::string point_dataset_csv(const PointDataset& ds);

struct LearnResult {
  ShallowNet net;
  double train_rmse = 0.0;
  double test_rmse = 0.0;
  double label_rms = 0.0;  // over the held-out rows
};

// Trains on the first 80% of rows, reports RMSE on the rest.
LearnResult learn_pointwise(const PointDataset& ds, int net_width, const TrainConfig& cfg);

// Shared right-hand sides with one label column per grid point.
struct GridDataset {
  std::vector<double> grid;
  BasisSpec basis;
  int dim = 0;
  std::vector<double> X;                    // size() x dim, row-major
  std::vector<std::vector<double>> labels;  // size() rows of grid.size() labels
  int size() const { return static_cast<int>(labels.size()); }
  const double* row(int i) const { return X.data() + static_cast<std::size_t>(i) * dim; }
};

GridDataset generate_grid_dataset(const PoissonProblem& problem, const DomainSpec& domain,
                                  const std::vector<double>& grid, int M, std::uint64_t seed);

std::string grid_dataset_csv(const GridDataset& ds);

struct GridOperator {
  std::vector<double> grid;
  std::vector<ShallowNet> nets;
  std::vector<double> test_rmse;  // held-out RMSE per grid point

  nlohmann::json to_json() const;
  static GridOperator from_json(const nlohmann::json& j);
};

GridOperator build_grid_operator(const PoissonProblem& problem, const DomainSpec& domain,
                                 const std::vector<double>& grid, int M, int net_width,
                                 const TrainConfig& cfg, int jobs = 1);

// Piecewise-linear in y between the per-grid-point nets; y must lie within
// [grid.front(), grid.back()].
double apply_grid_operator(const GridOperator& op, const CoeffVector& g, double y);

}  // namespace barron
