#include "barron/quadrature.hpp"

#include <cmath>

#include "barron/errors.hpp"

namespace barron {

QuadRule gauss_legendre(int n) {
  if (n < 1) throw validation_error("gauss_legendre: need at least 1 point");
  QuadRule r;
  r.x.resize(n);
  r.w.resize(n);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence: evaluates P_n(x) and P_n'(x).
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.x[i] = -x;
    r.w[i] = w;
    r.x[n - 1 - i] = x;
    r.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.x[n / 2] = 0.0;
  return r;
}

QuadRule gauss_legendre(int n, double a, double b) {
  QuadRule base = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    base.x[i] = mid + half * base.x[i];
    base.w[i] *= half;
  }
  return base;
}

QuadRule composite_gauss(double a, double b, int min_points) {
  if (min_points < 1) throw validation_error("composite_gauss: need at least 1 point");
  const int per_panel = 16;
  const int panels = (min_points + per_panel - 1) / per_panel;
  QuadRule base = gauss_legendre(per_panel);
  QuadRule r;
  r.x.reserve(static_cast<std::size_t>(panels) * per_panel);
  r.w.reserve(static_cast<std::size_t>(panels) * per_panel);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h, half = 0.5 * h;
    for (int i = 0; i < per_panel; ++i) {
      r.x.push_back(mid + half * base.x[i]);
      r.w.push_back(half * base.w[i]);
    }
  }
  return r;
}

}  // namespace barron
