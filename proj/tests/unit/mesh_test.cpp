#include "cdafem/mesh.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

using namespace cdafem;

namespace {

double min_angle_deg(const Mesh& mesh) {
  double worst = 180.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& g = mesh.geometry(t);
    for (int i = 0; i < 3; ++i) {
      const Vec2 u = g.corner[(i + 1) % 3] - g.corner[i];
      const Vec2 v = g.corner[(i + 2) % 3] - g.corner[i];
      worst = std::min(worst, std::acos(u.dot(v) / (u.norm() * v.norm())) * 180.0 / M_PI);
    }
  }
  return worst;
}

void check_conforming(const Mesh& mesh) {
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const auto& edge = mesh.edge(e);
    if (edge.boundary) {
      CHECK(edge.tri[1] == -1);
    } else {
      CHECK(edge.tri[0] >= 0);
      CHECK(edge.tri[1] >= 0);
    }
  }
  for (int t = 0; t < mesh.num_triangles(); ++t) CHECK(mesh.geometry(t).area > 0.0);
}

}  // namespace

TEST_SUITE("mesh") {

TEST_CASE("structured n=1: 2 triangles, 4 vertices, 5 edges (1 interior)") {
  const Mesh m = structured_unit_square(1);
  CHECK(m.num_triangles() == 2);
  CHECK(m.num_vertices() == 4);
  CHECK(m.num_edges() == 5);
  int interior = 0;
  for (int e = 0; e < m.num_edges(); ++e)
    if (!m.edge(e).boundary) ++interior;
  CHECK(interior == 1);
}

TEST_CASE("structured n=2: 8 triangles, 9 vertices, 16 edges by Euler's formula") {
  const Mesh m = structured_unit_square(2);
  CHECK(m.num_triangles() == 8);
  CHECK(m.num_vertices() == 9);
  CHECK(m.num_edges() == 16);
  CHECK(m.num_interior_vertices() == 1);
}

TEST_CASE("structured n=4: 32 triangles, 25 vertices, min angle 45 degrees") {
  const Mesh m = structured_unit_square(4);
  CHECK(m.num_triangles() == 32);
  CHECK(m.num_vertices() == 25);
  CHECK(min_angle_deg(m) == doctest::Approx(45.0));
  CHECK(m.total_area() == doctest::Approx(1.0));
}

TEST_CASE("refinement edges of the structured mesh are the hypotenuses") {
  const Mesh m = structured_unit_square(2);
  for (int t = 0; t < m.num_triangles(); ++t) {
    const auto& g = m.geometry(t);
    CHECK(g.edge_length[0] == doctest::Approx(g.diameter));  // edge (v0,v1) is longest
  }
}

TEST_CASE("element_geometry on the unit right triangle") {
  std::vector<Vec2> pts = {{0, 0}, {1, 0}, {0, 1}};
  const Mesh m(pts, {Triangle{{0, 1, 2}}});
  const auto rep = element_geometry(m, 0);
  CHECK(rep.area == doctest::Approx(0.5));
  CHECK(rep.diameter == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("element_geometry on an equilateral triangle of side 1") {
  std::vector<Vec2> pts = {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}};
  const Mesh m(pts, {Triangle{{0, 1, 2}}});
  const auto rep = element_geometry(m, 0);
  CHECK(rep.area == doctest::Approx(std::sqrt(3.0) / 4.0));
  CHECK(rep.diameter == doctest::Approx(1.0));
}

TEST_CASE("degenerate triangles are rejected at construction") {
  std::vector<Vec2> pts = {{0, 0}, {1, 0}, {2, 0}};
  CHECK_THROWS_AS(Mesh(pts, {Triangle{{0, 1, 2}}}), std::invalid_argument);
  // clockwise orientation rejected too
  std::vector<Vec2> pts2 = {{0, 0}, {0, 1}, {1, 0}};
  CHECK_THROWS_AS(Mesh(pts2, {Triangle{{0, 1, 2}}}), std::invalid_argument);
}

TEST_CASE("patch on the n=1 mesh contains both triangles") {
  const Mesh m = structured_unit_square(1);
  CHECK(m.patch(0) == std::vector<int>{0, 1});
  CHECK(m.patch(1) == std::vector<int>{0, 1});
}

TEST_CASE("patch of an interior triangle of n=4 has between 7 and 13 members") {
  const Mesh m = structured_unit_square(4);
  // find a triangle whose vertices are all interior grid points' neighbours:
  // take the one whose centroid is nearest the domain center
  int best = 0;
  double dist = 1e9;
  for (int t = 0; t < m.num_triangles(); ++t) {
    const auto& g = m.geometry(t);
    const double d = ((g.corner[0] + g.corner[1] + g.corner[2]) / 3.0 - Vec2(0.5, 0.5)).norm();
    if (d < dist) {
      dist = d;
      best = t;
    }
  }
  const auto p = m.patch(best);
  CHECK(p.size() >= 7);
  CHECK(p.size() <= 13);
  CHECK(std::find(p.begin(), p.end(), best) != p.end());
}

TEST_CASE("corner triangle patch contains the triangle itself") {
  const Mesh m = structured_unit_square(4);
  const auto p = m.patch(0);
  CHECK(std::find(p.begin(), p.end(), 0) != p.end());
}

TEST_CASE("min_diameter of structured meshes is sqrt(2)/n") {
  for (int n : {1, 2, 5, 8})
    CHECK(min_diameter(structured_unit_square(n)) == doctest::Approx(std::sqrt(2.0) / n));
  std::vector<Vec2> pts = {{0, 0}, {2, 0}, {0, 3}};
  const Mesh single(pts, {Triangle{{0, 1, 2}}});
  CHECK(min_diameter(single) == doctest::Approx(std::sqrt(13.0)));
}

TEST_CASE("marking one triangle of the n=1 mesh bisects both through the shared hypotenuse") {
  const Mesh m = structured_unit_square(1);
  MarkList marks;
  marks.set(0, 1);
  const Mesh r = bisect(m, marks);
  CHECK(r.num_triangles() == 4);
  CHECK(r.num_vertices() == 5);  // one new midpoint on the diagonal
  check_conforming(r);
  CHECK(r.total_area() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("empty mark list returns the mesh unchanged") {
  const Mesh m = structured_unit_square(2);
  const Mesh r = bisect(m, MarkList{});
  CHECK(r.num_triangles() == m.num_triangles());
  CHECK(r.num_vertices() == m.num_vertices());
}

TEST_CASE("two uniform k=1 rounds on n=1: all areas 1/8, conforming, legs become hypotenuses") {
  Mesh m = structured_unit_square(1);
  for (int round = 0; round < 2; ++round) {
    MarkList marks;
    for (int t = 0; t < m.num_triangles(); ++t) marks.set(t, 1);
    m = bisect(m, marks);
    check_conforming(m);
  }
  CHECK(m.num_triangles() == 8);
  for (int t = 0; t < m.num_triangles(); ++t)
    CHECK(m.geometry(t).area == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(m.total_area() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("after one uniform k=1 round on n=1 the minimum diameter is 1") {
  Mesh m = structured_unit_square(1);
  MarkList marks;
  marks.set(0, 1);
  marks.set(1, 1);
  m = bisect(m, marks);
  CHECK(m.num_triangles() == 4);
  CHECK(min_diameter(m) == doctest::Approx(1.0));
}

TEST_CASE("a k-count mark bisects k generations: areas shrink by 2^k") {
  const Mesh m = structured_unit_square(2);
  MarkList marks;
  marks.set(3, 3);
  const Mesh r = bisect(m, marks);
  check_conforming(r);
  const double parent_area = m.geometry(3).area;
  double smallest = 1e9;
  for (int t = 0; t < r.num_triangles(); ++t) smallest = std::min(smallest, r.geometry(t).area);
  CHECK(smallest == doctest::Approx(parent_area / 8.0).epsilon(1e-12));
  CHECK(r.total_area() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("area is conserved and conformity holds through random refinement") {
  const Mesh m = oracles::randomly_refined(3, 6, 1234);
  check_conforming(m);
  CHECK(m.total_area() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("shape regularity: min angle after 10 random rounds stays above half the initial one") {
  const Mesh m0 = structured_unit_square(2);
  const double a0 = min_angle_deg(m0);
  const Mesh m = oracles::randomly_refined(2, 10, 77);
  CHECK(min_angle_deg(m) >= a0 / 2.0 - 1e-9);
}

TEST_CASE("every bisection halves the parent area") {
  const Mesh m = structured_unit_square(1);
  MarkList marks;
  marks.set(0, 1);
  marks.set(1, 1);
  const Mesh r = bisect(m, marks);
  REQUIRE(r.num_triangles() == 4);
  for (int t = 0; t < 4; ++t)
    CHECK(r.geometry(t).area == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("mesh export writes vertex and triangle blocks") {
  const Mesh m = structured_unit_square(1);
  const std::string path = "mesh_export_test.txt";
  write_mesh_txt(m, path);
  std::ifstream in(path);
  std::string word;
  in >> word;
  CHECK(word == "vertices");
  int count;
  in >> count;
  CHECK(count == 4);
  write_mesh_vtk(m, "mesh_export_test.vtk");
  std::ifstream vtk("mesh_export_test.vtk");
  std::string line;
  std::getline(vtk, line);
  CHECK(line == "# vtk DataFile Version 2.0");
}

}  // TEST_SUITE
