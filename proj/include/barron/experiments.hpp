#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "barron/errors.hpp"
#include "barron/functional_zoo.hpp"
#include "barron/shallow_net.hpp"

namespace barron {

// One study run: a metric row per grid point plus optional fitted slope.
// wall_seconds is kept out of the deterministic outputs (metrics/report)
// and lands in a sidecar timings CSV only.
struct ExperimentReport {
  std::string experiment_id;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<double> wall_seconds;
  bool has_slope = false;
  double fitted_slope = 0.0;
  double slope_half_width = 0.0;
  std::string config_hash;
  std::string code_version;
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
  std::string metrics_csv() const;
  std::string timings_csv() const;
  double cell(int row, const std::string& column) const;
};

// Thrown when a grid point diverges; carries the rows that completed.
struct study_error : numeric_error {
  ExperimentReport partial;
  study_error(const std::string& msg, ExperimentReport p)
      : numeric_error(msg), partial(std::move(p)) {}
};

struct SlopeFit {
  double slope = 0.0;
  double half_width = 0.0;  // 1.96 * standard error of the slope
  double intercept = 0.0;
};

SlopeFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);
SlopeFit fit_loglog_slope(const std::vector<double>& m, const std::vector<double>& err);

// Two-column CSV of (log x, log y) pulled from a report, for plotting.
std::string loglog_plot_csv(const ExperimentReport& rep, const std::string& xcol,
                            const std::string& ycol);

// Runs fn(0..n-1) on up to `jobs` threads; rethrows the first exception.
void parallel_for(int jobs, int n, const std::function<void(int)>& fn);

// n rows of (coefficients sampled from f's domain, exact label); row i uses
// seed mix_seed(seed, i) so the result is independent of evaluation order.
Dataset sample_dataset(const FunctionalSpec& f, int n, std::uint64_t seed);

// Rate study: trains the dense form at every width in m_grid (best of 3
// seeds), then fits the log-log slope of held-out RMSE against width.
ExperimentReport convergence_study(const FunctionalSpec& f, const std::vector<int>& m_grid,
                                   const TrainConfig& cfg, int n_train, int n_test,
                                   int jobs = 1);

// Coordinate-cutoff gap study. The net is first rescaled to |w_j|_1 = 1
// (function-preserving), which makes sum|gamma_j| * delta a certified upper
// bound on |f*_m - f_m| over the cut domain; the observed max gap over
// n_samples draws is compared against that bound for every delta.
ExperimentReport cutoff_study(const FunctionalSpec& f, const ShallowNet& net, int N_cut,
                              const std::vector<double>& deltas, int n_samples,
                              std::uint64_t seed, int jobs = 1);

// H1-type box norm sqrt( int g^2 + sum_i c_i (d_i g)^2 ) of the unit sum
// g(b) = sum_j gamma_j ReLU(w_j . b - t_j) over the box
// (-1/2,1/2)^min(N,dim) x (-delta,delta)^(dim-N), with c_i = 1 on the first
// N coordinates and (2 delta)^2 on the rest (the weighting under which the
// cut-coefficient Parseval identity holds). Tensor quadrature; input_dim <= 3.
double h1_box_norm(const ShallowNet& net, int N, double delta, int quad_points);

// Trains the 3m+1-parameter per-coordinate form and the dense form at the
// same total parameter budget and reports both.
ExperimentReport per_coordinate_study(const FunctionalSpec& f, int budget,
                                      const TrainConfig& cfg, int n_train, int n_test,
                                      int jobs = 1);

struct BaselineSpec {
  int grid_size = 0;
  int hidden_width = 0;
  std::vector<double> sample_points;
  static BaselineSpec uniform(int grid_size, int hidden_width);
  void validate() const;
};

// Grid-sampling baseline: a one-hidden-layer net on pointwise samples
// v(x_1..x_g), compared against the coefficient-input net at matched
// parameter count. One metric row.
ExperimentReport deeponet_baseline(const FunctionalSpec& f, const BaselineSpec& baseline,
                                   const TrainConfig& cfg, int n_train, int n_test);

// Baseline rows across several grid resolutions.
ExperimentReport baseline_sweep(const FunctionalSpec& f, const std::vector<int>& grid_sizes,
                                int hidden_width, const TrainConfig& cfg, int n_train,
                                int n_test, int jobs = 1);

}  // namespace barron
