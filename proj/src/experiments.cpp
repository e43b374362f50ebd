#include "barron/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "barron/io_util.hpp"
#include "barron/quadrature.hpp"
#include "barron/rng.hpp"
#include "barron/version.hpp"

namespace barron {

namespace {

double now_seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

[[noreturn]] void no_such_column(const std::string& name) {
  throw validation_error("no such report column: " + name);
}

int column_index(const std::vector<std::string>& columns, const std::string& name) {
  for (int i = 0; i < static_cast<int>(columns.size()); ++i)
    if (columns[i] == name) return i;
  no_such_column(name);
}

}  // namespace

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json j;
  j["experiment_id"] = experiment_id;
  j["code_version"] = code_version.empty() ? std::string(kCodeVersion) : code_version;
  j["config_hash"] = config_hash;
  j["columns"] = columns;
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json jr = nlohmann::json::array();
    for (double v : row) jr.push_back(fmt_g17(v));
    jrows.push_back(std::move(jr));
  }
  j["rows"] = std::move(jrows);
  if (has_slope) {
    j["fitted_slope"] = fmt_g17(fitted_slope);
    j["slope_half_width"] = fmt_g17(slope_half_width);
  }
  j["extra"] = extra;
  return j;
}

std::string ExperimentReport::metrics_csv() const {
  std::string out = csv_row(columns);
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (double v : row) cells.push_back(fmt_g17(v));
    out += csv_row(cells);
  }
  return out;
}

std::string ExperimentReport::timings_csv() const {
  std::string out = "row,wall_seconds\n";
  for (std::size_t i = 0; i < wall_seconds.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%zu,%.6f\n", i, wall_seconds[i]);
    out += buf;
  }
  return out;
}

double ExperimentReport::cell(int row, const std::string& column) const {
  if (row < 0 || row >= static_cast<int>(rows.size()))
    throw validation_error("report row out of range");
  return rows[row][static_cast<std::size_t>(column_index(columns, column))];
}

SlopeFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  const int n = static_cast<int>(xs.size());
  if (n != static_cast<int>(ys.size()) || n < 2)
    throw validation_error("slope fit needs at least two (x, y) pairs");
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx <= 0.0) throw validation_error("slope fit needs distinct x values");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (n > 2) {
    double rss = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
      rss += r * r;
    }
    fit.half_width = 1.96 * std::sqrt(rss / (n - 2) / sxx);
  }
  return fit;
}

SlopeFit fit_loglog_slope(const std::vector<double>& m, const std::vector<double>& err) {
  std::vector<double> xs(m.size()), ys(err.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!(m[i] > 0.0)) throw validation_error("log-log fit needs positive x values");
    xs[i] = std::log(m[i]);
    // Guard against an exactly-zero error (e.g. a constant target): clamp far
    // below anything a trained float model produces.
    ys[i] = std::log(std::max(err[i], 1e-300));
  }
  return fit_line(xs, ys);
}

std::string loglog_plot_csv(const ExperimentReport& rep, const std::string& xcol,
                            const std::string& ycol) {
  const int xi = column_index(rep.columns, xcol);
  const int yi = column_index(rep.columns, ycol);
  std::string out = "log_" + xcol + ",log_" + ycol + "\n";
  for (const auto& row : rep.rows) {
    const double x = row[static_cast<std::size_t>(xi)];
    const double y = row[static_cast<std::size_t>(yi)];
    out += csv_row({fmt_g17(std::log(std::max(x, 1e-300))),
                    fmt_g17(std::log(std::max(y, 1e-300)))});
  }
  return out;
}

void parallel_for(int jobs, int n, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  if (jobs < 1) jobs = 1;
  const int workers = std::min(jobs, n);
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next.store(n);  // drain remaining work
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

Dataset sample_dataset(const FunctionalSpec& f, int n, std::uint64_t seed) {
  if (n < 1) throw validation_error("dataset size must be positive");
  Dataset data;
  data.dim = f.input_dim;
  data.X.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(f.input_dim));
  data.y.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    CoeffVector v = sample(f.domain, f.input_dim, mix_seed(seed, static_cast<std::uint64_t>(i)),
                           f.basis);
    data.add(v.coeffs, f.evaluate(v.coeffs));
  }
  return data;
}

namespace {

struct TrainedPoint {
  ShallowNet net;
  double train_rmse = 0.0;
  double test_rmse = 0.0;
  int best_seed_index = 0;
};

// Best held-out RMSE over three init/shuffle seeds; any divergence aborts.
TrainedPoint train_best_of(NetForm form, int input_dim, int width, const Dataset& train_data,
                           const Dataset& test_data, const TrainConfig& cfg,
                           std::uint64_t salt, int tries = 3) {
  std::optional<TrainedPoint> best;
  for (int s = 0; s < tries; ++s) {
    TrainConfig tc = cfg;
    tc.seed = mix_seed(cfg.seed, salt * 8 + static_cast<std::uint64_t>(s));
    ShallowNet net = init_net(form, input_dim, width, tc.seed, train_data.label_mean(),
                              cfg.init_scale);
    TrainResult res = train(std::move(net), train_data, tc);
    TrainedPoint point;
    point.train_rmse = rmse(res.net, train_data);
    point.test_rmse = rmse(res.net, test_data);
    point.best_seed_index = s;
    point.net = std::move(res.net);
    if (!best || point.test_rmse < best->test_rmse) best = std::move(point);
  }
  return *best;
}

}  // namespace

ExperimentReport convergence_study(const FunctionalSpec& f, const std::vector<int>& m_grid,
                                   const TrainConfig& cfg, int n_train, int n_test, int jobs) {
  if (m_grid.size() < 4)
    throw validation_error("convergence study needs at least four widths");
  for (std::size_t i = 0; i < m_grid.size(); ++i) {
    if (m_grid[i] < 1) throw validation_error("widths must be positive");
    if (i > 0 && m_grid[i] <= m_grid[i - 1])
      throw validation_error("widths must be strictly increasing");
  }
  if (n_train < 2 || n_test < 2) throw validation_error("need at least two samples per split");

  const Dataset train_data = sample_dataset(f, n_train, mix_seed(cfg.seed, 7001));
  const Dataset test_data = sample_dataset(f, n_test, mix_seed(cfg.seed, 7002));

  const int n = static_cast<int>(m_grid.size());
  std::vector<std::optional<std::vector<double>>> slots(static_cast<std::size_t>(n));
  std::vector<double> walls(static_cast<std::size_t>(n), 0.0);
  std::vector<int> seeds(static_cast<std::size_t>(n), 0);

  ExperimentReport rep;
  rep.experiment_id = "convergence:" + f.name;
  rep.columns = {"m", "train_rmse", "test_rmse", "path_norm"};
  rep.code_version = kCodeVersion;

  auto run_point = [&](int i) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      TrainedPoint point = train_best_of(NetForm::dense, f.input_dim, m_grid[i], train_data,
                                         test_data, cfg, static_cast<std::uint64_t>(i) + 1);
      slots[static_cast<std::size_t>(i)] = std::vector<double>{
          static_cast<double>(m_grid[i]), point.train_rmse, point.test_rmse,
          path_norm(point.net)};
      seeds[static_cast<std::size_t>(i)] = point.best_seed_index;
      walls[static_cast<std::size_t>(i)] = now_seconds_since(t0);
    } catch (const numeric_error& e) {
      throw numeric_error("width m=" + std::to_string(m_grid[i]) + ": " + e.what());
    }
  };

  auto finish = [&](bool complete) {
    rep.rows.clear();
    rep.wall_seconds.clear();
    nlohmann::json chosen = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
      if (!slots[static_cast<std::size_t>(i)]) continue;
      rep.rows.push_back(*slots[static_cast<std::size_t>(i)]);
      rep.wall_seconds.push_back(walls[static_cast<std::size_t>(i)]);
      chosen.push_back(seeds[static_cast<std::size_t>(i)]);
    }
    rep.extra["n_train"] = n_train;
    rep.extra["n_test"] = n_test;
    rep.extra["label_rms_test"] = fmt_g17(test_data.label_rms());
    rep.extra["best_seed_index"] = std::move(chosen);
    rep.extra["complete"] = complete;
    if (complete) {
      std::vector<double> ms, errs;
      for (const auto& row : rep.rows) {
        ms.push_back(row[0]);
        errs.push_back(row[2]);
      }
      const SlopeFit fit = fit_loglog_slope(ms, errs);
      rep.has_slope = true;
      rep.fitted_slope = fit.slope;
      rep.slope_half_width = fit.half_width;
    }
  };

  try {
    parallel_for(jobs, n, run_point);
  } catch (const numeric_error& e) {
    finish(false);
    throw study_error(std::string("convergence study aborted: ") + e.what(), rep);
  }
  finish(true);
  return rep;
}

ExperimentReport cutoff_study(const FunctionalSpec& f, const ShallowNet& net, int N_cut,
                              const std::vector<double>& deltas, int n_samples,
                              std::uint64_t seed, int jobs) {
  if (N_cut < 1 || N_cut >= net.input_dim)
    throw validation_error("cutoff position must satisfy 1 <= N_cut < input_dim");
  if (deltas.empty()) throw validation_error("need at least one cutoff width");
  for (double d : deltas)
    if (!(d > 0.0) || !(d < 0.5))
      throw validation_error("cutoff widths must lie in (0, 1/2)");
  if (n_samples < 1) throw validation_error("need at least one probe sample");

  // Rescaling to unit weight rows leaves the computed function unchanged and
  // turns sum|gamma| * delta into a certified bound on the truncation gap.
  ShallowNet probe = net;
  project_unit_l1(probe, /*clip_thresholds=*/false);
  double sum_gamma = 0.0;
  for (double g : probe.gamma) sum_gamma += std::abs(g);

  ExperimentReport rep;
  rep.experiment_id = "cutoff:" + f.name;
  rep.columns = {"delta", "max_gap", "certified_bound", "bound_ok", "sum_gamma"};
  rep.code_version = kCodeVersion;
  rep.rows.assign(deltas.size(), {});
  rep.wall_seconds.assign(deltas.size(), 0.0);

  parallel_for(jobs, static_cast<int>(deltas.size()), [&](int di) {
    const auto t0 = std::chrono::steady_clock::now();
    const double delta = deltas[static_cast<std::size_t>(di)];
    DomainSpec cut;
    cut.kind = DomainKind::cut;
    cut.N = N_cut;
    cut.delta = delta;
    cut.validate();
    const std::uint64_t dseed = mix_seed(seed, static_cast<std::uint64_t>(di) + 1);
    std::vector<double> truncated(static_cast<std::size_t>(probe.input_dim), 0.0);
    double max_gap = 0.0;
    for (int i = 0; i < n_samples; ++i) {
      CoeffVector v = sample(cut, probe.input_dim, mix_seed(dseed, static_cast<std::uint64_t>(i)),
                             f.basis);
      std::copy(v.coeffs.begin(), v.coeffs.end(), truncated.begin());
      std::fill(truncated.begin() + N_cut, truncated.end(), 0.0);
      const double gap = std::abs(probe.forward(v.coeffs.data()) - probe.forward(truncated.data()));
      max_gap = std::max(max_gap, gap);
    }
    const double bound = sum_gamma * delta;
    rep.rows[static_cast<std::size_t>(di)] = {delta, max_gap, bound,
                                              max_gap <= bound ? 1.0 : 0.0, sum_gamma};
    rep.wall_seconds[static_cast<std::size_t>(di)] = now_seconds_since(t0);
  });
  rep.extra["N_cut"] = N_cut;
  rep.extra["n_samples"] = n_samples;
  rep.extra["path_norm"] = fmt_g17(path_norm(probe));
  return rep;
}

double h1_box_norm(const ShallowNet& net, int N, double delta, int quad_points) {
  if (net.input_dim < 1 || net.input_dim > 3)
    throw validation_error("box norm quadrature supports input_dim <= 3");
  if (N < 0) throw validation_error("head size must be non-negative");
  if (net.input_dim > N && (!(delta > 0.0) || !(delta < 0.5)))
    throw validation_error("tail half-width must lie in (0, 1/2)");
  if (quad_points < 8) throw validation_error("need at least 8 quadrature points per axis");

  const int dim = net.input_dim;
  std::vector<QuadRule> rules;
  std::vector<double> weight_coeff;
  for (int i = 0; i < dim; ++i) {
    const bool head = i < N;
    const double hw = head ? 0.5 : delta;
    rules.push_back(composite_gauss(-hw, hw, quad_points));
    weight_coeff.push_back(head ? 1.0 : (2.0 * delta) * (2.0 * delta));
  }

  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  std::vector<double> b(static_cast<std::size_t>(dim), 0.0);
  std::vector<double> grad(static_cast<std::size_t>(dim), 0.0);
  double acc = 0.0;
  for (;;) {
    double w = 1.0;
    for (int i = 0; i < dim; ++i) {
      b[static_cast<std::size_t>(i)] = rules[static_cast<std::size_t>(i)].x[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      w *= rules[static_cast<std::size_t>(i)].w[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    // Unit sum only: the constant offset is not part of the dropped tail.
    double g = 0.0;
    std::fill(grad.begin(), grad.end(), 0.0);
    for (int j = 0; j < net.width(); ++j) {
      const double z = net.preactivation(j, b.data());
      if (z > 0.0) {
        g += net.gamma[static_cast<std::size_t>(j)] * z;
        if (net.form == NetForm::dense) {
          const double* wj = &net.w[static_cast<std::size_t>(j) * static_cast<std::size_t>(dim)];
          for (int i = 0; i < dim; ++i)
            grad[static_cast<std::size_t>(i)] += net.gamma[static_cast<std::size_t>(j)] * wj[i];
        } else {
          grad[static_cast<std::size_t>(net.coord[static_cast<std::size_t>(j)])] +=
              net.gamma[static_cast<std::size_t>(j)] * net.w[static_cast<std::size_t>(j)];
        }
      }
    }
    double integrand = g * g;
    for (int i = 0; i < dim; ++i)
      integrand += weight_coeff[static_cast<std::size_t>(i)] * grad[static_cast<std::size_t>(i)] *
                   grad[static_cast<std::size_t>(i)];
    acc += w * integrand;

    int axis = dim - 1;
    while (axis >= 0) {
      if (++idx[static_cast<std::size_t>(axis)] <
          static_cast<int>(rules[static_cast<std::size_t>(axis)].size())) break;
      idx[static_cast<std::size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  if (!std::isfinite(acc) || acc < 0.0) throw numeric_error("box norm quadrature failed");
  return std::sqrt(acc);
}

ExperimentReport per_coordinate_study(const FunctionalSpec& f, int budget,
                                      const TrainConfig& cfg, int n_train, int n_test,
                                      int jobs) {
  if (!f.separable)
    throw validation_error("per-coordinate study requires a separable functional");
  for (const auto& block : f.structure)
    if (block.size() != 1)
      throw validation_error("per-coordinate study requires singleton blocks");
  if (budget < 4) throw validation_error("parameter budget too small");
  if (n_train < 2 || n_test < 2) throw validation_error("need at least two samples per split");

  const Dataset train_data = sample_dataset(f, n_train, mix_seed(cfg.seed, 7001));
  const Dataset test_data = sample_dataset(f, n_test, mix_seed(cfg.seed, 7002));

  const int m_pc = std::max(1, (budget - 1) / 3);
  const int m_dense = std::max(1, (budget - 1) / (f.input_dim + 2));

  ExperimentReport rep;
  rep.experiment_id = "per-coordinate:" + f.name;
  rep.columns = {"per_coordinate", "width", "param_count",
                 "train_rmse",     "test_rmse", "path_norm"};
  rep.code_version = kCodeVersion;
  rep.rows.assign(2, {});
  rep.wall_seconds.assign(2, 0.0);

  try {
    parallel_for(jobs, 2, [&](int task) {
      const auto t0 = std::chrono::steady_clock::now();
      const NetForm form = task == 0 ? NetForm::per_coordinate : NetForm::dense;
      const int width = task == 0 ? m_pc : m_dense;
      try {
        TrainedPoint point = train_best_of(form, f.input_dim, width, train_data, test_data,
                                           cfg, static_cast<std::uint64_t>(task) + 40);
        rep.rows[static_cast<std::size_t>(task)] = {
            task == 0 ? 1.0 : 0.0,
            static_cast<double>(width),
            static_cast<double>(point.net.param_count()),
            point.train_rmse,
            point.test_rmse,
            path_norm(point.net)};
        rep.wall_seconds[static_cast<std::size_t>(task)] = now_seconds_since(t0);
      } catch (const numeric_error& e) {
        throw numeric_error(std::string(task == 0 ? "per-coordinate" : "dense") + " form: " +
                            e.what());
      }
    });
  } catch (const numeric_error& e) {
    ExperimentReport partial = rep;
    partial.rows.clear();
    partial.wall_seconds.clear();
    for (std::size_t i = 0; i < rep.rows.size(); ++i)
      if (!rep.rows[i].empty()) {
        partial.rows.push_back(rep.rows[i]);
        partial.wall_seconds.push_back(rep.wall_seconds[i]);
      }
    partial.extra["complete"] = false;
    throw study_error(std::string("per-coordinate study aborted: ") + e.what(), partial);
  }

  rep.extra["budget"] = budget;
  rep.extra["n_train"] = n_train;
  rep.extra["n_test"] = n_test;
  rep.extra["label_rms_test"] = fmt_g17(test_data.label_rms());
  rep.extra["complete"] = true;
  return rep;
}

BaselineSpec BaselineSpec::uniform(int grid_size, int hidden_width) {
  BaselineSpec spec;
  spec.grid_size = grid_size;
  spec.hidden_width = hidden_width;
  if (grid_size == 1) {
    spec.sample_points = {0.0};
  } else {
    for (int j = 0; j < grid_size; ++j)
      spec.sample_points.push_back(static_cast<double>(j) / (grid_size - 1));
  }
  return spec;
}

void BaselineSpec::validate() const {
  if (grid_size < 1) throw validation_error("baseline grid size must be positive");
  if (hidden_width < 1) throw validation_error("baseline hidden width must be positive");
  if (static_cast<int>(sample_points.size()) != grid_size)
    throw validation_error("baseline sample point count must equal the grid size");
  const int s = grid_size - 1;
  for (double x : sample_points) {
    if (!(x >= 0.0) || !(x <= 1.0))
      throw validation_error("baseline sample points must lie in [0, 1]");
    const double scaled = s == 0 ? x : x * s;
    if (std::abs(scaled - std::llround(scaled)) > 1e-12)
      throw validation_error("baseline sample points must sit on the uniform lattice");
  }
}

namespace {

// Shared draws: identical coefficient vectors feed both input encodings.
void build_baseline_rows(const FunctionalSpec& f, const BaselineSpec& baseline, int n,
                         std::uint64_t seed, Dataset& point_data, Dataset& coeff_data) {
  point_data.dim = baseline.grid_size;
  coeff_data.dim = f.input_dim;
  std::vector<double> point_row(static_cast<std::size_t>(baseline.grid_size), 0.0);
  for (int i = 0; i < n; ++i) {
    CoeffVector v = sample(f.domain, f.input_dim, mix_seed(seed, static_cast<std::uint64_t>(i)),
                           f.basis);
    for (int j = 0; j < baseline.grid_size; ++j)
      point_row[static_cast<std::size_t>(j)] =
          evaluate(v, baseline.sample_points[static_cast<std::size_t>(j)]);
    const double label = f.evaluate(v.coeffs);
    point_data.add(point_row, label);
    coeff_data.add(v.coeffs, label);
  }
}

}  // namespace

ExperimentReport deeponet_baseline(const FunctionalSpec& f, const BaselineSpec& baseline,
                                   const TrainConfig& cfg, int n_train, int n_test) {
  baseline.validate();
  if (n_train < 2 || n_test < 2) throw validation_error("need at least two samples per split");
  const auto t0 = std::chrono::steady_clock::now();

  Dataset point_train, coeff_train, point_test, coeff_test;
  build_baseline_rows(f, baseline, n_train, mix_seed(cfg.seed, 8001), point_train, coeff_train);
  build_baseline_rows(f, baseline, n_test, mix_seed(cfg.seed, 8002), point_test, coeff_test);

  TrainedPoint base = train_best_of(NetForm::dense, baseline.grid_size, baseline.hidden_width,
                                    point_train, point_test, cfg, 60);
  // Match total trainable parameters: hidden*(grid+2)+1 vs m*(N+2)+1.
  const int m_spectral = std::max(
      1, static_cast<int>(std::llround(static_cast<double>(baseline.hidden_width) *
                                       (baseline.grid_size + 2) / (f.input_dim + 2))));
  TrainedPoint coeff = train_best_of(NetForm::dense, f.input_dim, m_spectral, coeff_train,
                                     coeff_test, cfg, 61);

  ExperimentReport rep;
  rep.experiment_id = "baseline:" + f.name;
  rep.columns = {"grid_size",          "hidden_width",       "baseline_params",
                 "baseline_train_rmse", "baseline_test_rmse", "spectral_width",
                 "spectral_params",    "spectral_train_rmse", "spectral_test_rmse"};
  rep.code_version = kCodeVersion;
  rep.rows.push_back({static_cast<double>(baseline.grid_size),
                      static_cast<double>(baseline.hidden_width),
                      static_cast<double>(base.net.param_count()), base.train_rmse,
                      base.test_rmse, static_cast<double>(m_spectral),
                      static_cast<double>(coeff.net.param_count()), coeff.train_rmse,
                      coeff.test_rmse});
  rep.wall_seconds.push_back(now_seconds_since(t0));
  rep.extra["n_train"] = n_train;
  rep.extra["n_test"] = n_test;
  rep.extra["label_rms_test"] = fmt_g17(coeff_test.label_rms());
  rep.extra["label_std_test"] = fmt_g17(coeff_test.label_std());
  return rep;
}

ExperimentReport baseline_sweep(const FunctionalSpec& f, const std::vector<int>& grid_sizes,
                                int hidden_width, const TrainConfig& cfg, int n_train,
                                int n_test, int jobs) {
  if (grid_sizes.empty()) throw validation_error("need at least one grid size");
  ExperimentReport rep;
  rep.experiment_id = "baseline-sweep:" + f.name;
  rep.code_version = kCodeVersion;
  rep.columns = {"grid_size",          "hidden_width",       "baseline_params",
                 "baseline_train_rmse", "baseline_test_rmse", "spectral_width",
                 "spectral_params",    "spectral_train_rmse", "spectral_test_rmse"};
  rep.rows.assign(grid_sizes.size(), {});
  rep.wall_seconds.assign(grid_sizes.size(), 0.0);

  try {
    parallel_for(jobs, static_cast<int>(grid_sizes.size()), [&](int i) {
      TrainConfig point_cfg = cfg;
      point_cfg.seed = mix_seed(cfg.seed, 500 + static_cast<std::uint64_t>(i));
      try {
        ExperimentReport one = deeponet_baseline(
            f, BaselineSpec::uniform(grid_sizes[static_cast<std::size_t>(i)], hidden_width),
            point_cfg, n_train, n_test);
        rep.rows[static_cast<std::size_t>(i)] = one.rows.at(0);
        rep.wall_seconds[static_cast<std::size_t>(i)] = one.wall_seconds.at(0);
      } catch (const numeric_error& e) {
        throw numeric_error("grid size " +
                            std::to_string(grid_sizes[static_cast<std::size_t>(i)]) + ": " +
                            e.what());
      }
    });
  } catch (const numeric_error& e) {
    ExperimentReport partial = rep;
    partial.rows.clear();
    partial.wall_seconds.clear();
    for (std::size_t i = 0; i < rep.rows.size(); ++i)
      if (!rep.rows[i].empty()) {
        partial.rows.push_back(rep.rows[i]);
        partial.wall_seconds.push_back(rep.wall_seconds[i]);
      }
    partial.extra["complete"] = false;
    throw study_error(std::string("baseline sweep aborted: ") + e.what(), partial);
  }
  rep.extra["hidden_width"] = hidden_width;
  rep.extra["n_train"] = n_train;
  rep.extra["n_test"] = n_test;
  rep.extra["complete"] = true;
  return rep;
}

}  // namespace barron
