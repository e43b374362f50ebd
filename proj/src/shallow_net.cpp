#include "barron/shallow_net.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "barron/errors.hpp"
#include "barron/rng.hpp"

namespace barron {

int ShallowNet::param_count() const {
  return static_cast<int>(gamma.size() + t.size() + w.size()) + 1;
}

double ShallowNet::preactivation(int j, const double* b) const {
  if (form == NetForm::per_coordinate) return w[j] * b[coord[j]] - t[j];
  const double* wj = w.data() + static_cast<std::size_t>(j) * input_dim;
  double z = -t[j];
  for (int i = 0; i < input_dim; ++i) z += wj[i] * b[i];
  return z;
}

double ShallowNet::forward(const double* b) const {
  double out = c;
  for (int j = 0; j < width(); ++j) {
    const double z = preactivation(j, b);
    if (z > 0.0) out += gamma[j] * z;
  }
  return out;
}

double ShallowNet::forward(const std::vector<double>& b) const {
  if (static_cast<int>(b.size()) != input_dim)
    throw validation_error("forward: input length " + std::to_string(b.size()) +
                           " does not match net input_dim " + std::to_string(input_dim));
  return forward(b.data());
}

double ShallowNet::unit_weight_l1(int j) const {
  if (form == NetForm::per_coordinate) return std::abs(w[j]);
  const double* wj = w.data() + static_cast<std::size_t>(j) * input_dim;
  double s = 0.0;
  for (int i = 0; i < input_dim; ++i) s += std::abs(wj[i]);
  return s;
}

nlohmann::json ShallowNet::to_json() const {
  nlohmann::json j{{"form", form == NetForm::dense ? "dense" : "per-coordinate"},
                   {"input_dim", input_dim},
                   {"c", c},
                   {"gamma", gamma},
                   {"t", t},
                   {"w", w}};
  if (form == NetForm::per_coordinate) j["coord"] = coord;
  return j;
}

ShallowNet ShallowNet::from_json(const nlohmann::json& j) {
  ShallowNet n;
  const std::string form = j.at("form").get<std::string>();
  if (form == "dense") n.form = NetForm::dense;
  else if (form == "per-coordinate") n.form = NetForm::per_coordinate;
  else throw validation_error("unknown net form: " + form);
  n.input_dim = j.at("input_dim").get<int>();
  n.c = j.at("c").get<double>();
  n.gamma = j.at("gamma").get<std::vector<double>>();
  n.t = j.at("t").get<std::vector<double>>();
  n.w = j.at("w").get<std::vector<double>>();
  if (n.form == NetForm::per_coordinate) n.coord = j.at("coord").get<std::vector<int>>();
  return n;
}

Gradients gradient(const ShallowNet& net, const std::vector<double>& b,
                   double residual_weight) {
  if (static_cast<int>(b.size()) != net.input_dim)
    throw validation_error("gradient: input length does not match net input_dim");
  Gradients g;
  g.dc = residual_weight;
  g.dgamma.assign(net.gamma.size(), 0.0);
  g.dt.assign(net.t.size(), 0.0);
  g.dw.assign(net.w.size(), 0.0);
  for (int j = 0; j < net.width(); ++j) {
    const double z = net.preactivation(j, b.data());
    if (z <= 0.0) continue;  // subgradient 0 at the kink
    g.dgamma[j] = residual_weight * z;
    const double dz = residual_weight * net.gamma[j];
    g.dt[j] = -dz;
    if (net.form == NetForm::per_coordinate) {
      g.dw[j] = dz * b[net.coord[j]];
    } else {
      double* dwj = g.dw.data() + static_cast<std::size_t>(j) * net.input_dim;
      for (int i = 0; i < net.input_dim; ++i) dwj[i] = dz * b[i];
    }
  }
  return g;
}

double path_norm(const ShallowNet& net) {
  double s = 2.0 * std::abs(net.c);
  for (int j = 0; j < net.width(); ++j) s += std::abs(net.gamma[j]) * net.unit_weight_l1(j);
  return s;
}

void project_unit_l1(ShallowNet& net, bool clip_thresholds) {
  for (int j = 0; j < net.width(); ++j) {
    const double l1 = net.unit_weight_l1(j);
    if (l1 > 0.0) {
      net.gamma[j] *= l1;
      net.t[j] /= l1;
      if (net.form == NetForm::per_coordinate) {
        net.w[j] /= l1;
      } else {
        double* wj = net.w.data() + static_cast<std::size_t>(j) * net.input_dim;
        for (int i = 0; i < net.input_dim; ++i) wj[i] /= l1;
      }
    }
    if (clip_thresholds) net.t[j] = std::clamp(net.t[j], -1.0, 1.0);
  }
}

ShallowNet init_net(NetForm form, int input_dim, int m, std::uint64_t seed,
                    double label_mean, double init_scale) {
  if (input_dim < 1 || m < 1) throw validation_error("init_net: need input_dim >= 1 and m >= 1");
  ShallowNet net;
  net.form = form;
  net.input_dim = input_dim;
  net.gamma.assign(m, 0.0);
  net.t.resize(m);
  net.c = label_mean;
  Rng rng(seed);
  const double hw = init_scale / std::sqrt(static_cast<double>(input_dim));
  if (form == NetForm::dense) {
    net.w.resize(static_cast<std::size_t>(m) * input_dim);
    for (int j = 0; j < m; ++j) {
      double* wj = net.w.data() + static_cast<std::size_t>(j) * input_dim;
      double l1 = 0.0;
      for (int i = 0; i < input_dim; ++i) {
        wj[i] = rng.uniform(-hw, hw);
        l1 += std::abs(wj[i]);
      }
      for (int i = 0; i < input_dim; ++i) wj[i] /= l1;
      net.t[j] = rng.uniform(-1.0, 1.0);
    }
  } else {
    net.w.resize(m);
    net.coord.resize(m);
    for (int j = 0; j < m; ++j) {
      net.coord[j] = j % input_dim;
      net.w[j] = rng.uniform(-hw, hw) < 0.0 ? -1.0 : 1.0;
      net.t[j] = rng.uniform(-1.0, 1.0);
    }
  }
  return net;
}

void Dataset::add(const std::vector<double>& x, double label) {
  if (dim == 0) dim = static_cast<int>(x.size());
  if (static_cast<int>(x.size()) != dim)
    throw validation_error("dataset: inconsistent input length");
  X.insert(X.end(), x.begin(), x.end());
  y.push_back(label);
}

double Dataset::label_mean() const {
  if (y.empty()) return 0.0;
  return std::accumulate(y.begin(), y.end(), 0.0) / y.size();
}

double Dataset::label_std() const {
  if (y.size() < 2) return 0.0;
  const double mu = label_mean();
  double acc = 0.0;
  for (double v : y) acc += (v - mu) * (v - mu);
  return std::sqrt(acc / y.size());
}

double Dataset::label_rms() const {
  if (y.empty()) return 0.0;
  double acc = 0.0;
  for (double v : y) acc += v * v;
  return std::sqrt(acc / y.size());
}

namespace {
struct AdamState {
  std::vector<double> m, v;
  explicit AdamState(std::size_t n) : m(n, 0.0), v(n, 0.0) {}
};

inline void adam_step(double* p, const double* g, AdamState& st, std::size_t n, double lr,
                      double bc1, double bc2) {
  constexpr double b1 = 0.9, b2 = 0.999, eps = 1e-8;
  for (std::size_t i = 0; i < n; ++i) {
    st.m[i] = b1 * st.m[i] + (1.0 - b1) * g[i];
    st.v[i] = b2 * st.v[i] + (1.0 - b2) * g[i] * g[i];
    p[i] -= lr * (st.m[i] / bc1) / (std::sqrt(st.v[i] / bc2) + eps);
  }
}
}  // namespace

TrainResult train(ShallowNet net, const Dataset& data, const TrainConfig& cfg) {
  const int n = data.size();
  if (n == 0) throw validation_error("train: empty dataset");
  if (data.dim != net.input_dim)
    throw validation_error("train: dataset dim does not match net input_dim");
  if (cfg.batch_size < 1 || cfg.batch_size > n)
    throw validation_error("train: batch_size must be in [1, dataset size]");
  if (!(cfg.learning_rate > 0.0)) throw validation_error("train: learning_rate must be > 0");
  if (cfg.epochs < 1) throw validation_error("train: epochs must be >= 1");

  const int m = net.width();
  const int batches = (n + cfg.batch_size - 1) / cfg.batch_size;
  const long total_steps = static_cast<long>(cfg.epochs) * batches;
  constexpr double kPi = 3.1415926535897932384626433832795;

  Rng rng(cfg.seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);

  AdamState s_gamma(m), s_t(m), s_w(net.w.size()), s_c(1);
  std::vector<double> dgamma(m), dt(m), dw(net.w.size());
  std::vector<double> z(m);
  TrainResult result;
  result.loss_trace.reserve(cfg.epochs);
  long step = 0;

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(order);
    double epoch_loss = 0.0;
    for (int bstart = 0; bstart < n; bstart += cfg.batch_size) {
      const int bsz = std::min(cfg.batch_size, n - bstart);
      std::fill(dgamma.begin(), dgamma.end(), 0.0);
      std::fill(dt.begin(), dt.end(), 0.0);
      std::fill(dw.begin(), dw.end(), 0.0);
      double dc = 0.0, loss = 0.0;
      for (int bi = 0; bi < bsz; ++bi) {
        const double* x = data.row(order[bstart + bi]);
        const double label = data.y[order[bstart + bi]];
        double pred = net.c;
        for (int j = 0; j < m; ++j) {
          z[j] = net.preactivation(j, x);
          if (z[j] > 0.0) pred += net.gamma[j] * z[j];
        }
        const double err = pred - label;
        loss += err * err;
        const double r = 2.0 * err / bsz;
        dc += r;
        for (int j = 0; j < m; ++j) {
          if (z[j] <= 0.0) continue;
          dgamma[j] += r * z[j];
          const double dzj = r * net.gamma[j];
          dt[j] -= dzj;
          if (net.form == NetForm::per_coordinate) {
            dw[j] += dzj * x[net.coord[j]];
          } else {
            double* dwj = dw.data() + static_cast<std::size_t>(j) * net.input_dim;
            for (int i = 0; i < net.input_dim; ++i) dwj[i] += dzj * x[i];
          }
        }
      }
      loss /= bsz;
      epoch_loss += loss * bsz;
      if (!std::isfinite(loss))
        throw numeric_error("train: loss diverged (non-finite) at epoch " + std::to_string(epoch));

      ++step;
      const double lr = cfg.learning_rate * 0.5 *
                        (1.0 + std::cos(kPi * static_cast<double>(step) / total_steps));
      if (cfg.optimizer == TrainConfig::Opt::adam) {
        const double bc1 = 1.0 - std::pow(0.9, static_cast<double>(step));
        const double bc2 = 1.0 - std::pow(0.999, static_cast<double>(step));
        adam_step(net.gamma.data(), dgamma.data(), s_gamma, m, lr, bc1, bc2);
        adam_step(net.t.data(), dt.data(), s_t, m, lr, bc1, bc2);
        adam_step(net.w.data(), dw.data(), s_w, net.w.size(), lr, bc1, bc2);
        adam_step(&net.c, &dc, s_c, 1, lr, bc1, bc2);
      } else {
        for (int j = 0; j < m; ++j) {
          net.gamma[j] -= lr * dgamma[j];
          net.t[j] -= lr * dt[j];
        }
        for (std::size_t i = 0; i < net.w.size(); ++i) net.w[i] -= lr * dw[i];
        net.c -= lr * dc;
      }
      if (cfg.project_constraints) project_unit_l1(net, true);
    }
    result.loss_trace.push_back(epoch_loss / n);
  }
  result.net = std::move(net);
  return result;
}

double rmse(const ShallowNet& net, const Dataset& data) {
  if (data.size() == 0) return 0.0;
  double acc = 0.0;
  for (int i = 0; i < data.size(); ++i) {
    const double err = net.forward(data.row(i)) - data.y[i];
    acc += err * err;
  }
  return std::sqrt(acc / data.size());
}

}  // namespace barron
