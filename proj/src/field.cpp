#include "cdafem/field.hpp"

#include <stdexcept>

namespace cdafem {

DiscreteField::DiscreteField(const Mesh& mesh, Eigen::VectorXd nodal)
    : mesh_(&mesh), nodal_(std::move(nodal)) {
  if (nodal_.size() != mesh.num_vertices())
    throw std::invalid_argument("DiscreteField: nodal vector size must equal vertex count");
}

double DiscreteField::value(int t, const Vec2& x) const {
  const auto l = mesh_->geometry(t).barycentric(x);
  return value_bary(t, l[0], l[1], l[2]);
}

double DiscreteField::value_bary(int t, double l0, double l1, double l2) const {
  const auto& v = mesh_->triangle(t).v;
  return l0 * nodal_[v[0]] + l1 * nodal_[v[1]] + l2 * nodal_[v[2]];
}

Vec2 DiscreteField::gradient(int t) const {
  const auto& v = mesh_->triangle(t).v;
  const auto& g = mesh_->geometry(t);
  return nodal_[v[0]] * g.grad_lambda[0] + nodal_[v[1]] * g.grad_lambda[1] +
         nodal_[v[2]] * g.grad_lambda[2];
}

}  // namespace cdafem
