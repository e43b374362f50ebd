#pragma once

#include <vector>

namespace barron {

struct QuadRule {
  std::vector<double> x;
  std::vector<double> w;
  int size() const { return static_cast<int>(x.size()); }
};

// n-point Gauss-Legendre rule on [-1, 1], nodes by Newton iteration on P_n.
QuadRule gauss_legendre(int n);

// Same rule mapped onto [a, b].
QuadRule gauss_legendre(int n, double a, double b);

// Composite rule on [a, b] built from 16-point panels, with at least
// min_points nodes in total. 16 points resolve a couple of oscillation
// periods per panel at machine precision, so pairing min_points with the
// highest frequency present keeps the tail error negligible.
QuadRule composite_gauss(double a, double b, int min_points);

}  // namespace barron
