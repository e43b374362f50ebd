#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace barron {

// f_m(b) = c + sum_j gamma_j ReLU(w_j . b - t_j).
// dense: every unit reads all inputs (w is m x input_dim, row-major).
// per_coordinate: unit j reads the single input coord[j] with scalar
// weight w[j] (the 3m+1 parameter form).
enum class NetForm { dense, per_coordinate };

struct ShallowNet {
  NetForm form = NetForm::dense;
  int input_dim = 0;
  std::vector<double> gamma;
  std::vector<double> t;
  std::vector<double> w;
  std::vector<int> coord;  // per_coordinate only (0-based)
  double c = 0.0;

  int width() const { return static_cast<int>(gamma.size()); }
  int param_count() const;
  double preactivation(int j, const double* b) const;
  double forward(const double* b) const;
  double forward(const std::vector<double>& b) const;
  double unit_weight_l1(int j) const;

  nlohmann::json to_json() const;
  static ShallowNet from_json(const nlohmann::json& j);
};

struct Gradients {
  double dc = 0.0;
  std::vector<double> dgamma, dt, dw;
};

// d forward / d theta, scaled by residual_weight; ReLU subgradient 0 at the kink.
Gradients gradient(const ShallowNet& net, const std::vector<double>& b, double residual_weight);

// sum_j |gamma_j| |w_j|_1 + 2|c|
double path_norm(const ShallowNet& net);

// Rescale every unit to |w_j|_1 = 1, folding the scale into gamma_j and t_j
// (exactly function-preserving by positive homogeneity of ReLU). With
// clip_thresholds, |t_j| is afterwards clipped to 1, which may change the
// function; the plain rescale never does.
void project_unit_l1(ShallowNet& net, bool clip_thresholds = true);

// w_ij uniform in (-scale/sqrt(N), scale/sqrt(N)) then l1-normalized per
// unit, t_j uniform in (-1, 1), gamma = 0, c = label mean. The zero output
// layer makes the first optimizer steps fit the bias.
ShallowNet init_net(NetForm form, int input_dim, int m, std::uint64_t seed,
                    double label_mean, double init_scale = 1.0);

struct Dataset {
  int dim = 0;
  std::vector<double> X;  // row-major size() x dim
  std::vector<double> y;
  int size() const { return static_cast<int>(y.size()); }
  const double* row(int i) const { return X.data() + static_cast<std::size_t>(i) * dim; }
  void add(const std::vector<double>& x, double label);
  double label_mean() const;
  double label_std() const;
  double label_rms() const;
};

struct TrainConfig {
  enum class Opt { sgd, adam };
  Opt optimizer = Opt::adam;
  double learning_rate = 0.02;
  int batch_size = 256;
  int epochs = 400;
  std::uint64_t seed = 0;
  double init_scale = 1.0;
  bool project_constraints = false;
};

struct TrainResult {
  ShallowNet net;
  std::vector<double> loss_trace;  // mean batch MSE per epoch
};

// Minimizes empirical MSE with minibatch SGD/Adam under a cosine-decayed
// learning rate; deterministic given cfg.seed. Throws numeric_error if the
// loss goes non-finite.
TrainResult train(ShallowNet net, const Dataset& data, const TrainConfig& cfg);

double rmse(const ShallowNet& net, const Dataset& data);

}  // namespace barron
