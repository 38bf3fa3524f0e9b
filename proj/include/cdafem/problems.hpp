#pragma once

#include "cdafem/geometry.hpp"

#include <functional>
#include <string>

namespace cdafem {

/// Coefficients and data of  -eps*Lap(u) + div(a u) + b u = f  on the unit
/// square with homogeneous Dirichlet data, plus optional exact solution for
/// manufactured-solution studies. Evaluators are pure functions and safe for
/// concurrent use.
struct Problem {
  double eps = 1.0;
  std::function<Vec2(const Vec2&)> a;
  std::function<double(const Vec2&)> div_a;
  std::function<double(const Vec2&)> b;
  std::function<double(const Vec2&)> f;

  bool has_exact = false;
  std::function<double(const Vec2&)> u;
  std::function<Vec2(const Vec2&)> grad_u;
  std::function<double(const Vec2&)> laplace_u;
};

/// Smooth solution u1(x,y) = sin(pi x) sin(pi y), with a = [0,1], b = 1.
Problem problem_u1(double eps);

/// Outflow boundary layer at y = 1 of width O(eps):
/// u2(x,y) = x(1-x) [ y - (e^{-(1-y)/eps} - e^{-1/eps}) / (1 - e^{-1/eps}) ].
/// All exponentials carry non-positive arguments, so small eps underflows
/// silently to 0 instead of overflowing.
Problem problem_u2(double eps);

/// Interior layer of width O(sqrt(eps)) along x = 0.5:
/// u3(x,y) = 2x(1-x)y(1-y) (1 - tanh((0.5-x)/sqrt(eps))).
Problem problem_u3(double eps);

/// Lookup by id "u1" | "u2" | "u3"; throws std::invalid_argument otherwise.
Problem problem_by_name(const std::string& name, double eps);

}  // namespace cdafem
