#pragma once

#include <Eigen/Dense>

#include <array>

namespace cdafem {

using Vec2 = Eigen::Vector2d;

inline double cross2(const Vec2& a, const Vec2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Affine geometry of a single triangle with CCW corners.
///
/// Edge i joins corner i and corner (i+1)%3; the outward normals and the
/// barycentric gradients are derived once and reused by assembly, the
/// estimator and the seminorms.
struct TriangleGeometry {
  std::array<Vec2, 3> corner;
  double area = 0.0;                    // signed area, positive for CCW input
  double diameter = 0.0;                // longest edge
  std::array<double, 3> edge_length{};  // edge i = (corner[i], corner[(i+1)%3])
  std::array<Vec2, 3> edge_normal;      // unit outward normal of edge i
  std::array<Vec2, 3> grad_lambda;      // gradient of barycentric coordinate i

  Vec2 point(double l0, double l1, double l2) const {
    return l0 * corner[0] + l1 * corner[1] + l2 * corner[2];
  }

  std::array<double, 3> barycentric(const Vec2& x) const {
    std::array<double, 3> l;
    for (int i = 0; i < 3; ++i) l[i] = 1.0 + grad_lambda[i].dot(x - corner[i]);
    return l;
  }
};

TriangleGeometry make_triangle_geometry(const Vec2& p0, const Vec2& p1, const Vec2& p2);

}  // namespace cdafem
