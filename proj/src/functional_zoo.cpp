#include "barron/functional_zoo.hpp"

#include <cmath>

#include "barron/errors.hpp"

namespace barron {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;

void check_reads(const std::vector<double>& b, int need, const char* who) {
  if (static_cast<int>(b.size()) < need)
    throw validation_error(std::string(who) + ": coefficient vector shorter than functional input range");
}

// int_{-1/2}^{1/2} b exp(-2 pi i kappa b) db = i (-1)^kappa / (2 pi kappa)
std::complex<double> linear_block_integral(int kappa) {
  if (kappa == 0) return {0.0, 0.0};
  const double sign = (kappa % 2 == 0) ? 1.0 : -1.0;
  return {0.0, sign / (2.0 * kPi * kappa)};
}

// int b^3 exp(-2 pi i kappa b) db = i (-1)^kappa (1/(4 w) - 6/w^3), w = 2 pi kappa
std::complex<double> cubic_block_integral(int kappa) {
  if (kappa == 0) return {0.0, 0.0};
  const double w = 2.0 * kPi * kappa;
  const double sign = (kappa % 2 == 0) ? 1.0 : -1.0;
  return {0.0, sign * (1.0 / (4.0 * w) - 6.0 / (w * w * w))};
}

// int b^2 exp(-2 pi i kappa b) db = (-1)^kappa / (2 pi^2 kappa^2); 1/12 at kappa=0
std::complex<double> square_block_integral(int kappa) {
  if (kappa == 0) return {1.0 / 12.0, 0.0};
  const double sign = (kappa % 2 == 0) ? 1.0 : -1.0;
  return {sign / (2.0 * kPi * kPi * kappa * kappa), 0.0};
}

std::vector<std::vector<int>> singleton_blocks(const std::vector<double>& wts) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < static_cast<int>(wts.size()); ++i)
    if (wts[i] != 0.0) blocks.push_back({i + 1});
  return blocks;
}
}  // namespace

FunctionalSpec make_linear(const std::vector<double>& c) {
  FunctionalSpec f;
  f.name = "linear";
  f.weights = c;
  f.input_dim = static_cast<int>(c.size());
  f.structure = singleton_blocks(c);
  f.domain.kind = DomainKind::bound;
  f.evaluate = [c](const std::vector<double>& b) {
    check_reads(b, static_cast<int>(c.size()), "linear");
    double s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * b[i];
    return s;
  };
  auto blocks = f.structure;
  f.block_eval = [c, blocks](int j, const std::vector<double>& b) {
    return c[blocks[j][0] - 1] * b[0];
  };
  f.closed_form = [c, blocks](int j, const std::vector<int>& kappa, std::complex<double>& out) {
    out = c[blocks[j][0] - 1] * linear_block_integral(kappa[0]);
    return true;
  };
  return f;
}

FunctionalSpec make_cubic(const std::vector<double>& s) {
  FunctionalSpec f;
  f.name = "cubic";
  f.weights = s;
  f.input_dim = static_cast<int>(s.size());
  f.structure = singleton_blocks(s);
  f.domain.kind = DomainKind::bound;
  f.evaluate = [s](const std::vector<double>& b) {
    check_reads(b, static_cast<int>(s.size()), "cubic");
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) acc += s[i] * b[i] * b[i] * b[i];
    return acc;
  };
  auto blocks = f.structure;
  f.block_eval = [s, blocks](int j, const std::vector<double>& b) {
    return s[blocks[j][0] - 1] * b[0] * b[0] * b[0];
  };
  f.closed_form = [s, blocks](int j, const std::vector<int>& kappa, std::complex<double>& out) {
    out = s[blocks[j][0] - 1] * cubic_block_integral(kappa[0]);
    return true;
  };
  return f;
}

FunctionalSpec make_bilinear(const std::vector<double>& s) {
  FunctionalSpec f;
  f.name = "bilinear";
  f.weights = s;
  f.input_dim = static_cast<int>(s.size()) + 1;
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (s[i] != 0.0) f.structure.push_back({i + 1, i + 2});
  f.domain.kind = DomainKind::bound;
  f.evaluate = [s](const std::vector<double>& b) {
    check_reads(b, static_cast<int>(s.size()) + 1, "bilinear");
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) acc += s[i] * b[i] * b[i + 1];
    return acc;
  };
  auto blocks = f.structure;
  f.block_eval = [s, blocks](int j, const std::vector<double>& b) {
    return s[blocks[j][0] - 1] * b[0] * b[1];
  };
  f.closed_form = [s, blocks](int j, const std::vector<int>& kappa, std::complex<double>& out) {
    out = s[blocks[j][0] - 1] * linear_block_integral(kappa[0]) * linear_block_integral(kappa[1]);
    return true;
  };
  return f;
}

FunctionalSpec make_energy(double alpha, const DomainSpec& decay_domain) {
  if (!(alpha > 0.0)) throw validation_error("energy: alpha must be > 0");
  if (decay_domain.kind != DomainKind::decay)
    throw validation_error("energy: requires a decay-kind domain");
  decay_domain.validate();
  if (!(decay_domain.decay_exponent > 1.5))
    throw validation_error("energy: domain decays too slowly, need exponent > 3/2");
  const int N = decay_domain.N;
  if (N < 1) throw validation_error("energy: domain.N (truncation length) must be >= 1");
  FunctionalSpec f;
  f.name = "energy";
  f.input_dim = N;
  f.domain = decay_domain;
  f.basis.kind = BasisKind::real_trigonometric;
  f.params["alpha"] = alpha;
  // modal weight u_i = 2 pi^2 alpha n^2 for the band n owning position i
  std::vector<double> u(N);
  for (int i = 1; i <= N; ++i) {
    const int band = (i + 1) / 2;
    u[i - 1] = 2.0 * kPi * kPi * alpha * band * band;
    f.structure.push_back({i});
  }
  f.weights = u;
  f.evaluate = [u, N](const std::vector<double>& b) {
    check_reads(b, N, "energy");
    double acc = 0.0;
    for (int i = 0; i < N; ++i) acc += u[i] * b[i] * b[i];
    return acc;
  };
  f.block_eval = [u](int j, const std::vector<double>& b) { return u[j] * b[0] * b[0]; };
  f.closed_form = [u](int j, const std::vector<int>& kappa, std::complex<double>& out) {
    out = u[j] * square_block_integral(kappa[0]);
    return true;
  };
  return f;
}

FunctionalSpec make_l2norm(const DomainSpec& decay_domain) {
  if (decay_domain.kind != DomainKind::decay)
    throw validation_error("l2norm: requires a decay-kind domain");
  decay_domain.validate();
  if (!(decay_domain.decay_exponent > 0.5))
    throw validation_error("l2norm: domain decays too slowly, need exponent > 1/2");
  const int N = decay_domain.N;
  if (N < 1) throw validation_error("l2norm: domain.N (truncation length) must be >= 1");
  FunctionalSpec f;
  f.name = "l2norm";
  f.input_dim = N;
  f.domain = decay_domain;
  f.separable = false;
  std::vector<int> all(N);
  for (int i = 0; i < N; ++i) all[i] = i + 1;
  f.structure.push_back(all);
  f.evaluate = [N](const std::vector<double>& b) {
    check_reads(b, N, "l2norm");
    double acc = 0.0;
    for (int i = 0; i < N; ++i) acc += b[i] * b[i];
    return std::sqrt(acc);
  };
  f.block_eval = [N](int, const std::vector<double>& b) {
    double acc = 0.0;
    for (int i = 0; i < N; ++i) acc += b[i] * b[i];
    return std::sqrt(acc);
  };
  return f;
}

FunctionalSpec make_constant(double value, int input_dim) {
  if (input_dim < 1) throw validation_error("constant: input_dim must be >= 1");
  FunctionalSpec f;
  f.name = "constant";
  f.input_dim = input_dim;
  f.structure.push_back({1});
  f.domain.kind = DomainKind::bound;
  f.params["value"] = value;
  f.evaluate = [value](const std::vector<double>&) { return value; };
  f.block_eval = [value](int, const std::vector<double>&) { return value; };
  f.closed_form = [value](int, const std::vector<int>& kappa, std::complex<double>& out) {
    out = (kappa[0] == 0) ? std::complex<double>(value, 0.0) : std::complex<double>(0.0, 0.0);
    return true;
  };
  return f;
}

namespace {
std::vector<double> weights_from(const nlohmann::json& params) {
  if (!params.contains("weights") || !params.at("weights").is_array())
    throw validation_error("functional params: missing 'weights' array");
  std::vector<double> w;
  for (const auto& x : params.at("weights")) {
    if (!x.is_number()) throw validation_error("functional params: 'weights' must be numeric");
    w.push_back(x.get<double>());
  }
  if (w.empty()) throw validation_error("functional params: 'weights' must be nonempty");
  return w;
}

DomainSpec domain_from(const nlohmann::json& j) {
  DomainSpec d;
  const std::string kind = j.value("kind", "bound");
  if (kind == "bound") d.kind = DomainKind::bound;
  else if (kind == "cut") d.kind = DomainKind::cut;
  else if (kind == "decay") d.kind = DomainKind::decay;
  else throw validation_error("unknown domain kind: " + kind);
  d.N = j.value("N", 0);
  d.delta = j.value("delta", 0.0);
  d.decay_C = j.value("decay_C", 0.0);
  d.decay_exponent = j.value("decay_exponent", 0.0);
  d.validate();
  return d;
}
}  // namespace

FunctionalSpec make_functional(const std::string& name, const nlohmann::json& params) {
  FunctionalSpec f;
  if (name == "linear") f = make_linear(weights_from(params));
  else if (name == "cubic") f = make_cubic(weights_from(params));
  else if (name == "bilinear") f = make_bilinear(weights_from(params));
  else if (name == "energy") {
    if (!params.contains("domain")) throw validation_error("energy: missing 'domain'");
    f = make_energy(params.value("alpha", 1.0), domain_from(params.at("domain")));
  } else if (name == "l2norm") {
    if (!params.contains("domain")) throw validation_error("l2norm: missing 'domain'");
    f = make_l2norm(domain_from(params.at("domain")));
  } else if (name == "constant") {
    if (!params.contains("value")) throw validation_error("constant: missing 'value'");
    f = make_constant(params.at("value").get<double>(), params.value("input_dim", 1));
  } else {
    throw validation_error("unknown functional name: '" + name + "'");
  }
  if (params.contains("domain") && name != "energy" && name != "l2norm")
    f.domain = domain_from(params.at("domain"));
  if (params.contains("basis"))
    f.basis.kind = BasisSpec::kind_from_name(params.at("basis").get<std::string>());
  return f;
}

}  // namespace barron
