#pragma once

#include "cdafem/mesh.hpp"

#include <Eigen/Dense>

namespace cdafem {

/// Continuous P1 field given by one nodal value per mesh vertex.
class DiscreteField {
 public:
  DiscreteField(const Mesh& mesh, Eigen::VectorXd nodal);

  const Mesh& mesh() const { return *mesh_; }
  const Eigen::VectorXd& nodal() const { return nodal_; }
  double nodal_value(int v) const { return nodal_[v]; }

  double value(int t, const Vec2& x) const;
  double value_bary(int t, double l0, double l1, double l2) const;

  /// Constant gradient on element t.
  Vec2 gradient(int t) const;

 private:
  const Mesh* mesh_;
  Eigen::VectorXd nodal_;
};

}  // namespace cdafem
