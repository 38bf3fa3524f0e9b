#pragma once

#include "cdafem/geometry.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace cdafem {

/// Vertex-index triple of one triangle, stored CCW. The refinement edge for
/// newest-vertex bisection is the edge between v[0] and v[1]; v[2] is the
/// peak (the newest vertex of the previous bisection).
struct Triangle {
  std::array<int, 3> v;
};

struct EdgeInfo {
  int a = -1, b = -1;               // endpoint vertices, a < b
  std::array<int, 2> tri{-1, -1};   // incident triangles, tri[1] == -1 on the boundary
  bool boundary = false;
};

/// Immutable conforming triangulation. Construction builds the edge table,
/// vertex/triangle adjacency and per-triangle geometry, and validates
/// orientation and conformity (every interior edge has exactly two incident
/// triangles, every boundary edge exactly one).
class Mesh {
 public:
  Mesh(std::vector<Vec2> vertices, std::vector<Triangle> triangles);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_interior_vertices() const { return num_interior_vertices_; }

  const Vec2& vertex(int v) const { return vertices_[v]; }
  const Triangle& triangle(int t) const { return triangles_[t]; }
  const EdgeInfo& edge(int e) const { return edges_[e]; }
  bool vertex_on_boundary(int v) const { return vertex_boundary_[v]; }

  /// Global edge index of local edge i = (v[i], v[(i+1)%3]) of triangle t.
  int triangle_edge(int t, int i) const { return tri_edges_[t][i]; }

  const TriangleGeometry& geometry(int t) const { return geometry_[t]; }
  const std::vector<int>& vertex_triangles(int v) const { return vertex_tris_[v]; }

  /// All triangles sharing at least a vertex with t, including t itself.
  std::vector<int> patch(int t) const;

  double min_diameter() const { return h_min_; }
  double max_diameter() const { return h_max_; }
  double total_area() const { return total_area_; }

 private:
  std::vector<Vec2> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<EdgeInfo> edges_;
  std::vector<std::array<int, 3>> tri_edges_;
  std::vector<bool> vertex_boundary_;
  std::vector<std::vector<int>> vertex_tris_;
  std::vector<TriangleGeometry> geometry_;
  double h_min_ = 0.0, h_max_ = 0.0, total_area_ = 0.0;
  int num_interior_vertices_ = 0;
};

/// Requested bisection counts per triangle, k >= 1 each.
struct MarkList {
  std::map<int, int> counts;

  void set(int t, int k);
  bool empty() const { return counts.empty(); }
};

/// Structured mesh of 2n^2 right triangles on the unit square; every cell is
/// split along the lower-left to upper-right diagonal and refinement edges
/// are the hypotenuses, so runs are bit-reproducible.
Mesh structured_unit_square(int n);

/// Newest-vertex bisection of every marked triangle k times, with conformity
/// closure, returning a new mesh. Children inherit their refinement edges
/// opposite the newest vertex.
Mesh bisect(const Mesh& mesh, const MarkList& marks);

struct ElementGeometryReport {
  double area;
  double diameter;
  std::array<double, 3> edge_lengths;
  std::array<Vec2, 3> outward_normals;
};

ElementGeometryReport element_geometry(const Mesh& mesh, int t);

double min_diameter(const Mesh& mesh);

/// Plain-text export: vertex block "index x y", then triangle block
/// "index v0 v1 v2".
void write_mesh_txt(const Mesh& mesh, const std::string& path);

/// Legacy-VTK export for visualization, with optional per-cell scalar data.
void write_mesh_vtk(const Mesh& mesh, const std::string& path,
                    const std::vector<double>* cell_data = nullptr,
                    const std::string& cell_data_name = "indicator");

}  // namespace cdafem
