#include "cdafem/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace cdafem {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("problem: eps must lie in (0, 1]");
}

Problem base_problem(double eps) {
  Problem p;
  p.eps = eps;
  p.a = [](const Vec2&) { return Vec2(0.0, 1.0); };
  p.div_a = [](const Vec2&) { return 0.0; };
  p.b = [](const Vec2&) { return 1.0; };
  return p;
}

}  // namespace

Problem problem_u1(double eps) {
  check_eps(eps);
  Problem p = base_problem(eps);
  p.has_exact = true;
  p.u = [](const Vec2& x) { return std::sin(M_PI * x.x()) * std::sin(M_PI * x.y()); };
  p.grad_u = [](const Vec2& x) {
    return Vec2(M_PI * std::cos(M_PI * x.x()) * std::sin(M_PI * x.y()),
                M_PI * std::sin(M_PI * x.x()) * std::cos(M_PI * x.y()));
  };
  p.laplace_u = [](const Vec2& x) {
    return -2.0 * M_PI * M_PI * std::sin(M_PI * x.x()) * std::sin(M_PI * x.y());
  };
  // f = -eps*Lap(u) + du/dy + u for a = [0,1], b = 1
  p.f = [eps](const Vec2& x) {
    const double sx = std::sin(M_PI * x.x()), sy = std::sin(M_PI * x.y());
    return (2.0 * M_PI * M_PI * eps + 1.0) * sx * sy + M_PI * sx * std::cos(M_PI * x.y());
  };
  return p;
}

Problem problem_u2(double eps) {
  check_eps(eps);
  Problem p = base_problem(eps);
  p.has_exact = true;

  // layer factor g(y) = (E - c) / D with E = e^{-(1-y)/eps}, c = e^{-1/eps},
  // D = 1 - c; exponents are <= 0 for y in [0,1]
  const double c = std::exp(-1.0 / eps);
  const double D = 1.0 - c;
  auto layer = [eps, c, D](double y) { return (std::exp(-(1.0 - y) / eps) - c) / D; };
  auto dlayer = [eps, D](double y) { return std::exp(-(1.0 - y) / eps) / (eps * D); };
  auto q = [layer](double y) { return y - layer(y); };

  p.u = [q](const Vec2& x) { return x.x() * (1.0 - x.x()) * q(x.y()); };
  p.grad_u = [q, dlayer](const Vec2& x) {
    return Vec2((1.0 - 2.0 * x.x()) * q(x.y()), x.x() * (1.0 - x.x()) * (1.0 - dlayer(x.y())));
  };
  p.laplace_u = [eps, q, dlayer](const Vec2& x) {
    // q'' = -g'' = -g'/eps
    return -2.0 * q(x.y()) - x.x() * (1.0 - x.x()) * dlayer(x.y()) / eps;
  };
  // The layer part of u is annihilated by -eps*d_yy + d_y, leaving a smooth
  // forcing: f = 2 eps q(y) + x(1-x) (1 + q(y)).
  p.f = [eps, q](const Vec2& x) {
    return 2.0 * eps * q(x.y()) + x.x() * (1.0 - x.x()) * (1.0 + q(x.y()));
  };
  return p;
}

Problem problem_u3(double eps) {
  check_eps(eps);
  Problem p = base_problem(eps);
  p.has_exact = true;
  const double rt = std::sqrt(eps);

  // w(x) = 1 - tanh((0.5-x)/rt), w' = sech^2/rt, w'' = 2 tanh sech^2 / eps
  auto parts = [rt, eps](double x, double& w, double& dw, double& ddw) {
    const double t = std::tanh((0.5 - x) / rt);
    const double s2 = 1.0 - t * t;
    w = 1.0 - t;
    dw = s2 / rt;
    ddw = 2.0 * t * s2 / eps;
  };

  p.u = [rt](const Vec2& x) {
    return 2.0 * x.x() * (1.0 - x.x()) * x.y() * (1.0 - x.y()) * (1.0 - std::tanh((0.5 - x.x()) / rt));
  };
  p.grad_u = [parts](const Vec2& x) {
    double w, dw, ddw;
    parts(x.x(), w, dw, ddw);
    const double py = x.y() * (1.0 - x.y());
    const double px = x.x() * (1.0 - x.x());
    return Vec2(2.0 * py * ((1.0 - 2.0 * x.x()) * w + px * dw), 2.0 * px * (1.0 - 2.0 * x.y()) * w);
  };
  p.laplace_u = [parts](const Vec2& x) {
    double w, dw, ddw;
    parts(x.x(), w, dw, ddw);
    const double py = x.y() * (1.0 - x.y());
    const double px = x.x() * (1.0 - x.x());
    const double uxx = 2.0 * py * (-2.0 * w + 2.0 * (1.0 - 2.0 * x.x()) * dw + px * ddw);
    const double uyy = -4.0 * px * w;
    return uxx + uyy;
  };
  p.f = [eps, u = p.u, grad = p.grad_u, lap = p.laplace_u](const Vec2& x) {
    return -eps * lap(x) + grad(x).y() + u(x);
  };
  return p;
}

Problem problem_by_name(const std::string& name, double eps) {
  if (name == "u1") return problem_u1(eps);
  if (name == "u2") return problem_u2(eps);
  if (name == "u3") return problem_u3(eps);
  throw std::invalid_argument("unknown problem id: " + name);
}

}  // namespace cdafem
