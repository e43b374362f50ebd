#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "barron/errors.hpp"
#include "barron/experiments.hpp"
#include "barron/function_space.hpp"
#include "barron/functional_zoo.hpp"
#include "barron/io_util.hpp"
#include "barron/pde_app.hpp"
#include "barron/rng.hpp"
#include "barron/shallow_net.hpp"
#include "barron/spectral.hpp"
#include "barron/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

using namespace barron;

struct CliOptions {
  std::string config_path;
  std::string out_root = "out";
  std::optional<std::uint64_t> seed;
  int jobs = 0;  // 0: pick a default
};

int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::max(1u, std::min(4u, hw == 0 ? 1u : hw)));
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw validation_error(where + ": expected an object");
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* key : allowed)
      if (item.key() == key) {
        ok = true;
        break;
      }
    if (!ok) throw validation_error(where + ": unknown key '" + item.key() + "'");
  }
}

void check_domain_keys(const json& obj, const std::string& where) {
  check_keys(obj, where, {"kind", "N", "delta", "decay_C", "decay_exponent"});
}

void check_functional_keys(const json& obj, const std::string& where) {
  check_keys(obj, where, {"name", "weights", "domain", "basis", "alpha", "value", "input_dim"});
  if (obj.contains("domain")) check_domain_keys(obj.at("domain"), where + ".domain");
}

void check_train_keys(const json& obj, const std::string& where) {
  check_keys(obj, where,
             {"optimizer", "learning_rate", "batch_size", "epochs", "init_scale",
              "project_constraints"});
}

FunctionalSpec functional_from(const json& cfg) {
  if (!cfg.contains("functional")) throw validation_error("config: missing 'functional'");
  const json& jf = cfg.at("functional");
  check_functional_keys(jf, "functional");
  if (!jf.contains("name")) throw validation_error("functional: missing 'name'");
  return make_functional(jf.at("name").get<std::string>(), jf);
}

TrainConfig train_from(const json& cfg, std::uint64_t seed) {
  TrainConfig tc;
  tc.seed = seed;
  if (!cfg.contains("train")) return tc;
  const json& jt = cfg.at("train");
  check_train_keys(jt, "train");
  const std::string opt = jt.value("optimizer", "adam");
  if (opt == "adam") tc.optimizer = TrainConfig::Opt::adam;
  else if (opt == "sgd") tc.optimizer = TrainConfig::Opt::sgd;
  else throw validation_error("train.optimizer: unknown value '" + opt + "'");
  tc.learning_rate = jt.value("learning_rate", tc.learning_rate);
  tc.batch_size = jt.value("batch_size", tc.batch_size);
  tc.epochs = jt.value("epochs", tc.epochs);
  tc.init_scale = jt.value("init_scale", tc.init_scale);
  tc.project_constraints = jt.value("project_constraints", tc.project_constraints);
  return tc;
}

DomainSpec domain_from(const json& j, const std::string& where) {
  check_domain_keys(j, where);
  DomainSpec d;
  const std::string kind = j.value("kind", "bound");
  if (kind == "bound") d.kind = DomainKind::bound;
  else if (kind == "cut") d.kind = DomainKind::cut;
  else if (kind == "decay") d.kind = DomainKind::decay;
  else throw validation_error(where + ": unknown domain kind '" + kind + "'");
  d.N = j.value("N", 0);
  d.delta = j.value("delta", 0.0);
  d.decay_C = j.value("decay_C", 0.0);
  d.decay_exponent = j.value("decay_exponent", 0.0);
  d.validate();
  return d;
}

template <typename T>
T require(const json& cfg, const char* key) {
  if (!cfg.contains(key)) throw validation_error(std::string("config: missing '") + key + "'");
  try {
    return cfg.at(key).get<T>();
  } catch (const json::exception&) {
    throw validation_error(std::string("config: bad value for '") + key + "'");
  }
}

// Run directory scaffolding: every command writes its resolved config, its
// artifacts, and a manifest that is enough to reproduce the run.
struct RunDir {
  fs::path dir;
  std::string command;
  std::string config_hash;
  std::string config_dump;
  std::vector<std::string> outputs;

  void add(const std::string& name, const std::string& content) {
    write_text_file(dir / name, content);
    outputs.push_back(name);
  }
  void finalize(const std::string& status) {
    write_text_file(dir / "config.json", config_dump);
    json manifest;
    manifest["format_version"] = kConfigFormatVersion;
    manifest["code_version"] = kCodeVersion;
    manifest["command"] = command;
    manifest["config_hash"] = config_hash;
    manifest["status"] = status;
    std::vector<std::string> sorted = outputs;
    std::sort(sorted.begin(), sorted.end());
    manifest["outputs"] = sorted;
    write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
  }
};

RunDir open_run_dir(const CliOptions& opts, const std::string& command, json& cfg) {
  if (!cfg.contains("version")) throw validation_error("config: missing 'version'");
  if (!cfg.at("version").is_number_integer() ||
      cfg.at("version").get<int>() != kConfigFormatVersion)
    throw validation_error("config: unsupported format version");
  if (cfg.contains("command") && cfg.at("command").get<std::string>() != command)
    throw validation_error("config: 'command' is '" + cfg.at("command").get<std::string>() +
                           "' but the invoked subcommand is '" + command + "'");
  cfg["command"] = command;
  if (opts.seed) cfg["seed"] = *opts.seed;
  if (!cfg.contains("seed")) cfg["seed"] = 0;
  if (!cfg.at("seed").is_number_unsigned() && !cfg.at("seed").is_number_integer())
    throw validation_error("config: 'seed' must be an integer");

  RunDir run;
  run.command = command;
  run.config_dump = cfg.dump(2) + "\n";
  run.config_hash = hex16(fnv1a64(run.config_dump));
  run.dir = fs::path(opts.out_root) / (command + "-" + run.config_hash);
  std::error_code ec;
  fs::create_directories(run.dir, ec);
  if (ec) throw validation_error("cannot create run directory " + run.dir.string());
  return run;
}

void write_report(RunDir& run, ExperimentReport rep, bool with_plot = false,
                  const std::string& xcol = "", const std::string& ycol = "") {
  rep.config_hash = run.config_hash;
  run.add("report.json", rep.to_json().dump(2) + "\n");
  run.add("metrics.csv", rep.metrics_csv());
  run.add("timings.csv", rep.timings_csv());
  if (with_plot && !rep.rows.empty()) run.add("plot.csv", loglog_plot_csv(rep, xcol, ycol));
}

int cmd_coefficients(const CliOptions& opts, json cfg) {
  check_keys(cfg, "config",
             {"version", "command", "seed", "functional", "max_linf", "quad_points", "cut"});
  RunDir run = open_run_dir(opts, "coefficients", cfg);
  const FunctionalSpec f = functional_from(cfg);
  const int max_linf = require<int>(cfg, "max_linf");
  const int quad_points = cfg.value("quad_points", 8 * std::max(1, max_linf));

  FourierTable table;
  if (cfg.contains("cut")) {
    check_keys(cfg.at("cut"), "cut", {"N", "delta"});
    DomainSpec cut;
    cut.kind = DomainKind::cut;
    cut.N = require<int>(cfg.at("cut"), "N");
    cut.delta = require<double>(cfg.at("cut"), "delta");
    cut.validate();
    table = coefficients_cut(f, cut, max_linf, quad_points);
  } else {
    table = coefficients(f, max_linf, quad_points);
  }

  const double bnorm = barron_norm(table, table.s_barron);
  const double hnorm = hilbert_norm(table, table.s_hilbert);
  if (hnorm > bnorm * (1.0 + 1e-12))
    throw numeric_error("norm embedding violated: hilbert " + fmt_g17(hnorm) + " > barron " +
                        fmt_g17(bnorm));

  json out;
  out["functional"] = f.name;
  out["entries"] = static_cast<int>(table.entries.size());
  out["barron_norm"] = fmt_g17(bnorm);
  out["hilbert_norm"] = fmt_g17(hnorm);
  out["s_barron"] = table.s_barron;
  out["s_hilbert"] = table.s_hilbert;
  out["table"] = table.to_json();
  run.add("coefficients.json", out.dump(2) + "\n");
  run.add("coefficients.csv", table.to_csv());
  run.finalize("ok");
  std::cout << run.dir.string() << "\n"
            << "entries " << table.entries.size() << ", barron " << fmt_g17(bnorm)
            << ", hilbert " << fmt_g17(hnorm) << "\n";
  return 0;
}

int cmd_study(const CliOptions& opts, const std::string& kind, json cfg) {
  const std::string command = "study-" + kind;
  const int jobs = opts.jobs > 0 ? opts.jobs : default_jobs();

  if (kind == "convergence") {
    check_keys(cfg, "config",
               {"version", "command", "seed", "functional", "m_grid", "train", "n_train",
                "n_test"});
    RunDir run = open_run_dir(opts, command, cfg);
    const FunctionalSpec f = functional_from(cfg);
    const auto m_grid = require<std::vector<int>>(cfg, "m_grid");
    const TrainConfig tc = train_from(cfg, cfg.at("seed").get<std::uint64_t>());
    const int n_train = require<int>(cfg, "n_train");
    const int n_test = require<int>(cfg, "n_test");
    try {
      ExperimentReport rep = convergence_study(f, m_grid, tc, n_train, n_test, jobs);
      write_report(run, std::move(rep), true, "m", "test_rmse");
      run.finalize("ok");
    } catch (const study_error& e) {
      write_report(run, e.partial);
      run.finalize(std::string("aborted: ") + e.what());
      std::cerr << "numeric error: " << e.what() << "\n";
      return 1;
    }
    std::cout << run.dir.string() << "\n";
    return 0;
  }

  if (kind == "cutoff") {
    check_keys(cfg, "config",
               {"version", "command", "seed", "functional", "net_width", "n_train", "train",
                "N_cut", "deltas", "n_samples"});
    RunDir run = open_run_dir(opts, command, cfg);
    const std::uint64_t seed = cfg.at("seed").get<std::uint64_t>();
    const FunctionalSpec f = functional_from(cfg);
    const int net_width = require<int>(cfg, "net_width");
    const int n_train = require<int>(cfg, "n_train");
    const int N_cut = require<int>(cfg, "N_cut");
    const auto deltas = require<std::vector<double>>(cfg, "deltas");
    const int n_samples = require<int>(cfg, "n_samples");
    TrainConfig tc = train_from(cfg, mix_seed(seed, 2));

    const Dataset data = sample_dataset(f, n_train, mix_seed(seed, 7001));
    ShallowNet net = init_net(NetForm::dense, f.input_dim, net_width, mix_seed(tc.seed, 31),
                              data.label_mean(), tc.init_scale);
    TrainResult res = train(std::move(net), data, tc);
    ExperimentReport rep = cutoff_study(f, res.net, N_cut, deltas, n_samples,
                                        mix_seed(seed, 4242), jobs);
    rep.extra["train_rmse"] = fmt_g17(rmse(res.net, data));
    write_report(run, std::move(rep));
    run.finalize("ok");
    std::cout << run.dir.string() << "\n";
    return 0;
  }

  if (kind == "per-coordinate") {
    check_keys(cfg, "config",
               {"version", "command", "seed", "functional", "budget", "train", "n_train",
                "n_test"});
    RunDir run = open_run_dir(opts, command, cfg);
    const FunctionalSpec f = functional_from(cfg);
    const int budget = require<int>(cfg, "budget");
    const TrainConfig tc = train_from(cfg, cfg.at("seed").get<std::uint64_t>());
    const int n_train = require<int>(cfg, "n_train");
    const int n_test = require<int>(cfg, "n_test");
    try {
      ExperimentReport rep = per_coordinate_study(f, budget, tc, n_train, n_test, jobs);
      write_report(run, std::move(rep));
      run.finalize("ok");
    } catch (const study_error& e) {
      write_report(run, e.partial);
      run.finalize(std::string("aborted: ") + e.what());
      std::cerr << "numeric error: " << e.what() << "\n";
      return 1;
    }
    std::cout << run.dir.string() << "\n";
    return 0;
  }

  if (kind == "baseline") {
    check_keys(cfg, "config",
               {"version", "command", "seed", "functional", "grid_sizes", "hidden_width",
                "train", "n_train", "n_test"});
    RunDir run = open_run_dir(opts, command, cfg);
    const FunctionalSpec f = functional_from(cfg);
    const auto grid_sizes = require<std::vector<int>>(cfg, "grid_sizes");
    const int hidden_width = require<int>(cfg, "hidden_width");
    const TrainConfig tc = train_from(cfg, cfg.at("seed").get<std::uint64_t>());
    const int n_train = require<int>(cfg, "n_train");
    const int n_test = require<int>(cfg, "n_test");
    try {
      ExperimentReport rep = baseline_sweep(f, grid_sizes, hidden_width, tc, n_train, n_test,
                                            jobs);
      write_report(run, std::move(rep));
      run.finalize("ok");
    } catch (const study_error& e) {
      write_report(run, e.partial);
      run.finalize(std::string("aborted: ") + e.what());
      std::cerr << "numeric error: " << e.what() << "\n";
      return 1;
    }
    std::cout << run.dir.string() << "\n";
    return 0;
  }

  throw validation_error("unknown study kind: " + kind);
}

PoissonProblem problem_from(const json& cfg) {
  if (!cfg.contains("problem")) throw validation_error("config: missing 'problem'");
  check_keys(cfg.at("problem"), "problem", {"variant", "alpha", "n_modes"});
  return PoissonProblem::from_json(cfg.at("problem"));
}

int cmd_pde(const CliOptions& opts, const std::string& mode, json cfg) {
  const std::string command = "pde-" + mode;
  const int jobs = opts.jobs > 0 ? opts.jobs : default_jobs();

  if (mode == "pointwise") {
    check_keys(cfg, "config",
               {"version", "command", "seed", "problem", "domain", "x0", "M", "net_width",
                "train"});
    RunDir run = open_run_dir(opts, command, cfg);
    const std::uint64_t seed = cfg.at("seed").get<std::uint64_t>();
    const PoissonProblem problem = problem_from(cfg);
    if (!cfg.contains("domain")) throw validation_error("config: missing 'domain'");
    const DomainSpec domain = domain_from(cfg.at("domain"), "domain");
    const double x0 = require<double>(cfg, "x0");
    const int M = require<int>(cfg, "M");
    const int net_width = require<int>(cfg, "net_width");
    TrainConfig tc = train_from(cfg, mix_seed(seed, 2));

    const PointDataset ds = generate_dataset(problem, domain, x0, M, mix_seed(seed, 1));
    const LearnResult lr = learn_pointwise(ds, net_width, tc);

    // Held-out predictions against the oracle labels.
    const int n_test = std::max(1, ds.size() / 5);
    std::string errors = "u_oracle,u_net\n";
    for (int i = ds.size() - n_test; i < ds.size(); ++i) {
      const double* row = ds.data.row(i);
      errors += csv_row({fmt_g17(ds.data.y[static_cast<std::size_t>(i)]),
                         fmt_g17(lr.net.forward(row))});
    }

    CoeffVector probe;
    probe.basis = ds.basis;
    probe.coeffs.assign(ds.data.row(0), ds.data.row(0) + ds.data.dim);

    json result;
    result["x0"] = fmt_g17(x0);
    result["M"] = M;
    result["net_width"] = net_width;
    result["train_rmse"] = fmt_g17(lr.train_rmse);
    result["test_rmse"] = fmt_g17(lr.test_rmse);
    result["label_rms"] = fmt_g17(lr.label_rms);
    result["rel_test_rmse"] = fmt_g17(lr.label_rms > 0.0 ? lr.test_rmse / lr.label_rms : 0.0);
    result["oracle_residual"] = fmt_g17(oracle_residual(problem, probe));

    run.add("dataset.csv", point_dataset_csv(ds));
    run.add("net.json", lr.net.to_json().dump(2) + "\n");
    run.add("errors.csv", errors);
    run.add("result.json", result.dump(2) + "\n");
    run.finalize("ok");
    std::cout << run.dir.string() << "\n"
              << "test rmse " << fmt_g17(lr.test_rmse) << " (label rms " << fmt_g17(lr.label_rms)
              << ")\n";
    return 0;
  }

  if (mode == "grid") {
    check_keys(cfg, "config",
               {"version", "command", "seed", "problem", "domain", "grid", "M", "net_width",
                "train", "n_holdout", "refine"});
    RunDir run = open_run_dir(opts, command, cfg);
    const std::uint64_t seed = cfg.at("seed").get<std::uint64_t>();
    const PoissonProblem problem = problem_from(cfg);
    if (!cfg.contains("domain")) throw validation_error("config: missing 'domain'");
    const DomainSpec domain = domain_from(cfg.at("domain"), "domain");
    const int M = require<int>(cfg, "M");
    const int net_width = require<int>(cfg, "net_width");
    const int n_holdout = cfg.value("n_holdout", 20);
    const int refine = cfg.value("refine", 65);
    if (n_holdout < 1 || refine < 2) throw validation_error("config: bad holdout/refine");
    TrainConfig tc = train_from(cfg, mix_seed(seed, 2));

    std::vector<double> grid;
    if (!cfg.contains("grid")) throw validation_error("config: missing 'grid'");
    if (cfg.at("grid").is_object()) {
      check_keys(cfg.at("grid"), "grid", {"Q"});
      const int Q = require<int>(cfg.at("grid"), "Q");
      if (Q < 1) throw validation_error("grid.Q must be positive");
      for (int q = 0; q < Q; ++q)
        grid.push_back(static_cast<double>(q + 1) / (Q + 1));
    } else {
      grid = require<std::vector<double>>(cfg, "grid");
    }

    const GridDataset ds = generate_grid_dataset(problem, domain, grid, M, mix_seed(seed, 1));
    TrainConfig op_cfg = tc;
    op_cfg.seed = mix_seed(seed, 1);  // dataset seed; per-point seeds derive from it
    const GridOperator op = build_grid_operator(problem, domain, grid, M, net_width, op_cfg,
                                                jobs);

    // Held-out band-limited right-hand sides against the oracle on a finer
    // y lattice spanning the operator grid.
    std::vector<double> max_err(static_cast<std::size_t>(refine), 0.0);
    std::vector<double> max_u(static_cast<std::size_t>(refine), 0.0);
    double sup_rel = 0.0;
    for (int h = 0; h < n_holdout; ++h) {
      CoeffVector g = sample(domain, problem.n_coeffs(),
                             mix_seed(seed, 9000 + static_cast<std::uint64_t>(h)),
                             problem.basis());
      const CoeffVector u = solution_coeffs(problem, g);
      double g_sup_err = 0.0, g_sup_u = 0.0;
      for (int r = 0; r < refine; ++r) {
        const double t = static_cast<double>(r) / (refine - 1);
        const double y = grid.front() + t * (grid.back() - grid.front());
        const double exact = evaluate(u, y);
        const double err = std::abs(apply_grid_operator(op, g, y) - exact);
        max_err[static_cast<std::size_t>(r)] = std::max(max_err[static_cast<std::size_t>(r)], err);
        max_u[static_cast<std::size_t>(r)] = std::max(max_u[static_cast<std::size_t>(r)],
                                                      std::abs(exact));
        g_sup_err = std::max(g_sup_err, err);
        g_sup_u = std::max(g_sup_u, std::abs(exact));
      }
      if (g_sup_u > 0.0) sup_rel = std::max(sup_rel, g_sup_err / g_sup_u);
    }
    std::string error_csv = "y,max_abs_err,max_abs_u\n";
    for (int r = 0; r < refine; ++r) {
      const double t = static_cast<double>(r) / (refine - 1);
      const double y = grid.front() + t * (grid.back() - grid.front());
      error_csv += csv_row({fmt_g17(y), fmt_g17(max_err[static_cast<std::size_t>(r)]),
                            fmt_g17(max_u[static_cast<std::size_t>(r)])});
    }

    json result;
    result["Q"] = static_cast<int>(grid.size());
    result["M"] = M;
    result["net_width"] = net_width;
    json rmse_arr = json::array();
    for (double r : op.test_rmse) rmse_arr.push_back(fmt_g17(r));
    result["per_point_test_rmse"] = std::move(rmse_arr);
    result["holdout_sup_rel_error"] = fmt_g17(sup_rel);
    result["n_holdout"] = n_holdout;

    run.add("dataset.csv", grid_dataset_csv(ds));
    run.add("operator.json", op.to_json().dump(2) + "\n");
    run.add("error.csv", error_csv);
    run.add("result.json", result.dump(2) + "\n");
    run.finalize("ok");
    std::cout << run.dir.string() << "\n"
              << "holdout sup relative error " << fmt_g17(sup_rel) << "\n";
    return 0;
  }

  throw validation_error("unknown pde mode: " + mode);
}

int cmd_sample_data(const CliOptions& opts, json cfg) {
  check_keys(cfg, "config", {"version", "command", "seed", "functional", "n"});
  RunDir run = open_run_dir(opts, "sample-data", cfg);
  const FunctionalSpec f = functional_from(cfg);
  const int n = require<int>(cfg, "n");
  const Dataset data = sample_dataset(f, n, mix_seed(cfg.at("seed").get<std::uint64_t>(), 7001));

  std::vector<std::string> header;
  for (int i = 1; i <= f.input_dim; ++i) header.push_back("b_" + std::to_string(i));
  header.push_back("f");
  std::string csv = csv_row(header);
  for (int i = 0; i < data.size(); ++i) {
    std::vector<std::string> cells;
    const double* row = data.row(i);
    for (int j = 0; j < data.dim; ++j) cells.push_back(fmt_g17(row[j]));
    cells.push_back(fmt_g17(data.y[static_cast<std::size_t>(i)]));
    csv += csv_row(cells);
  }
  run.add("samples.csv", csv);
  run.finalize("ok");
  std::cout << run.dir.string() << "\n";
  return 0;
}

json load_config(const CliOptions& opts) {
  if (opts.config_path.empty()) throw validation_error("--config is required");
  const std::string text = read_text_file(opts.config_path);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw validation_error(std::string("config: invalid JSON: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier coefficients of functionals, shallow-net studies, and Poisson operator learning"};
  app.require_subcommand(1);

  CliOptions opts;
  std::string study_kind, pde_mode;
  std::string command_id;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opts.config_path, "JSON config file")->required();
    sub->add_option("--out", opts.out_root, "root directory for run outputs");
    sub->add_option("--seed", opts.seed, "override the config seed");
    sub->add_option("--jobs", opts.jobs, "max concurrent tasks");
  };

  CLI::App* coeff = app.add_subcommand("coefficients", "tabulate functional Fourier coefficients");
  add_common(coeff);
  coeff->callback([&] { command_id = "coefficients"; });

  CLI::App* study = app.add_subcommand("study", "experiment harness");
  study->require_subcommand(1);
  for (const char* kind : {"convergence", "cutoff", "per-coordinate", "baseline"}) {
    CLI::App* sub = study->add_subcommand(kind);
    add_common(sub);
    sub->callback([&, kind] {
      command_id = "study";
      study_kind = kind;
    });
  }

  CLI::App* pde = app.add_subcommand("pde", "Poisson pointwise / grid operator learning");
  pde->require_subcommand(1);
  for (const char* mode : {"pointwise", "grid"}) {
    CLI::App* sub = pde->add_subcommand(mode);
    add_common(sub);
    sub->callback([&, mode] {
      command_id = "pde";
      pde_mode = mode;
    });
  }

  CLI::App* sample = app.add_subcommand("sample-data", "draw labeled samples from a functional");
  add_common(sample);
  sample->callback([&] { command_id = "sample-data"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    json cfg = load_config(opts);
    if (command_id == "coefficients") return cmd_coefficients(opts, std::move(cfg));
    if (command_id == "study") return cmd_study(opts, study_kind, std::move(cfg));
    if (command_id == "pde") return cmd_pde(opts, pde_mode, std::move(cfg));
    if (command_id == "sample-data") return cmd_sample_data(opts, std::move(cfg));
    std::cerr << "error: no command selected\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
