#include "cdafem/mesh.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cdafem {

namespace {

inline std::uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

Mesh::Mesh(std::vector<Vec2> vertices, std::vector<Triangle> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  const int nv = num_vertices();
  const int nt = num_triangles();
  if (nt == 0) throw std::invalid_argument("Mesh: empty triangle list");

  geometry_.reserve(nt);
  tri_edges_.assign(nt, {-1, -1, -1});
  vertex_tris_.assign(nv, {});
  h_min_ = std::numeric_limits<double>::max();

  std::unordered_map<std::uint64_t, int> edge_index;
  edge_index.reserve(static_cast<std::size_t>(nt) * 2);

  for (int t = 0; t < nt; ++t) {
    const auto& tri = triangles_[t];
    for (int i = 0; i < 3; ++i) {
      if (tri.v[i] < 0 || tri.v[i] >= nv) throw std::invalid_argument("Mesh: vertex index out of range");
      vertex_tris_[tri.v[i]].push_back(t);
    }
    TriangleGeometry g = make_triangle_geometry(vertices_[tri.v[0]], vertices_[tri.v[1]], vertices_[tri.v[2]]);
    if (!(g.area > 0.0)) throw std::invalid_argument("Mesh: triangle is degenerate or not CCW");
    h_min_ = std::min(h_min_, g.diameter);
    h_max_ = std::max(h_max_, g.diameter);
    total_area_ += g.area;
    geometry_.push_back(std::move(g));

    for (int i = 0; i < 3; ++i) {
      const int a = tri.v[i], b = tri.v[(i + 1) % 3];
      const auto key = edge_key(a, b);
      auto it = edge_index.find(key);
      if (it == edge_index.end()) {
        EdgeInfo e;
        e.a = std::min(a, b);
        e.b = std::max(a, b);
        e.tri[0] = t;
        edge_index.emplace(key, static_cast<int>(edges_.size()));
        tri_edges_[t][i] = static_cast<int>(edges_.size());
        edges_.push_back(e);
      } else {
        EdgeInfo& e = edges_[it->second];
        if (e.tri[1] != -1) throw std::invalid_argument("Mesh: edge shared by more than two triangles");
        e.tri[1] = t;
        tri_edges_[t][i] = it->second;
      }
    }
  }

  vertex_boundary_.assign(nv, false);
  for (auto& e : edges_) {
    e.boundary = (e.tri[1] == -1);
    if (e.boundary) {
      vertex_boundary_[e.a] = true;
      vertex_boundary_[e.b] = true;
    }
  }
  for (int v = 0; v < nv; ++v)
    if (!vertex_boundary_[v]) ++num_interior_vertices_;
}

std::vector<int> Mesh::patch(int t) const {
  std::unordered_set<int> seen;
  std::vector<int> out;
  for (int i = 0; i < 3; ++i)
    for (int s : vertex_tris_[triangles_[t].v[i]])
      if (seen.insert(s).second) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

void MarkList::set(int t, int k) {
  if (k < 1) throw std::invalid_argument("MarkList: bisection count must be >= 1");
  counts[t] = k;
}

Mesh structured_unit_square(int n) {
  if (n < 1) throw std::invalid_argument("structured_unit_square: n must be >= 1");
  std::vector<Vec2> vertices;
  vertices.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i)
      vertices.emplace_back(static_cast<double>(i) / n, static_cast<double>(j) / n);

  auto vid = [n](int i, int j) { return j * (n + 1) + i; };

  std::vector<Triangle> tris;
  tris.reserve(static_cast<std::size_t>(2) * n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int sw = vid(i, j), se = vid(i + 1, j), ne = vid(i + 1, j + 1), nw = vid(i, j + 1);
      // refinement edge (first two vertices) is the sw-ne hypotenuse
      tris.push_back({{ne, sw, se}});
      tris.push_back({{sw, ne, nw}});
    }
  }
  return Mesh(std::move(vertices), std::move(tris));
}

namespace {

// Working copy used while rounds of bisection are applied.
struct WorkMesh {
  std::vector<Vec2> vertices;
  std::vector<Triangle> tris;
  std::vector<int> remaining;  // bisections still owed per triangle
};

// One conforming bisection round: every triangle with remaining > 0 is
// bisected through its refinement edge; closure marks further refinement
// edges until no triangle has a marked edge without a marked refinement
// edge. Owed counts decrease by the number of generations applied.
void bisect_round(WorkMesh& w) {
  const int nt = static_cast<int>(w.tris.size());

  std::unordered_map<std::uint64_t, int> edge_midpoint;  // marked edge -> new vertex
  std::unordered_set<std::uint64_t> marked;

  auto mark_edge = [&](int a, int b) { return marked.insert(edge_key(a, b)).second; };

  for (int t = 0; t < nt; ++t)
    if (w.remaining[t] > 0) mark_edge(w.tris[t].v[0], w.tris[t].v[1]);

  // closure fixpoint
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t < nt; ++t) {
      const auto& v = w.tris[t].v;
      const bool any = marked.count(edge_key(v[0], v[1])) || marked.count(edge_key(v[1], v[2])) ||
                       marked.count(edge_key(v[2], v[0]));
      if (any && mark_edge(v[0], v[1])) changed = true;
    }
  }

  auto midpoint_of = [&](int a, int b) {
    const auto key = edge_key(a, b);
    auto it = edge_midpoint.find(key);
    if (it != edge_midpoint.end()) return it->second;
    const int id = static_cast<int>(w.vertices.size());
    w.vertices.push_back(0.5 * (w.vertices[a] + w.vertices[b]));
    edge_midpoint.emplace(key, id);
    return id;
  };

  std::vector<Triangle> out;
  std::vector<int> out_remaining;
  out.reserve(w.tris.size() * 2);

  for (int t = 0; t < nt; ++t) {
    const auto v = w.tris[t].v;
    if (!marked.count(edge_key(v[0], v[1]))) {
      out.push_back(w.tris[t]);
      out_remaining.push_back(w.remaining[t]);
      continue;
    }
    const int owed = w.remaining[t];
    const int m = midpoint_of(v[0], v[1]);
    // children keep CCW orientation; each child's refinement edge is the
    // parent edge opposite the new vertex
    const Triangle child1{{v[2], v[0], m}};
    const Triangle child2{{v[1], v[2], m}};
    auto emit = [&](const Triangle& c) {
      if (marked.count(edge_key(c.v[0], c.v[1]))) {
        const int m2 = midpoint_of(c.v[0], c.v[1]);
        out.push_back({{c.v[2], c.v[0], m2}});
        out_remaining.push_back(std::max(owed - 2, 0));
        out.push_back({{c.v[1], c.v[2], m2}});
        out_remaining.push_back(std::max(owed - 2, 0));
      } else {
        out.push_back(c);
        out_remaining.push_back(std::max(owed - 1, 0));
      }
    };
    emit(child1);
    emit(child2);
  }

  w.tris = std::move(out);
  w.remaining = std::move(out_remaining);
}

}  // namespace

Mesh bisect(const Mesh& mesh, const MarkList& marks) {
  if (marks.empty()) return mesh;

  WorkMesh w;
  w.vertices.reserve(mesh.num_vertices() * 2);
  for (int v = 0; v < mesh.num_vertices(); ++v) w.vertices.push_back(mesh.vertex(v));
  w.tris.reserve(mesh.num_triangles() * 2);
  for (int t = 0; t < mesh.num_triangles(); ++t) w.tris.push_back(mesh.triangle(t));
  w.remaining.assign(mesh.num_triangles(), 0);
  for (const auto& [t, k] : marks.counts) {
    if (t < 0 || t >= mesh.num_triangles()) throw std::invalid_argument("bisect: mark index out of range");
    if (k < 1) throw std::invalid_argument("bisect: bisection count must be >= 1");
    w.remaining[t] = k;
  }

  while (std::any_of(w.remaining.begin(), w.remaining.end(), [](int r) { return r > 0; }))
    bisect_round(w);

  return Mesh(std::move(w.vertices), std::move(w.tris));
}

ElementGeometryReport element_geometry(const Mesh& mesh, int t) {
  const auto& g = mesh.geometry(t);
  return {g.area, g.diameter, g.edge_length, g.edge_normal};
}

double min_diameter(const Mesh& mesh) { return mesh.min_diameter(); }

void write_mesh_txt(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_mesh_txt: cannot open " + path);
  out << "vertices " << mesh.num_vertices() << "\n";
  char buf[128];
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    std::snprintf(buf, sizeof buf, "%d %.17g %.17g\n", v, mesh.vertex(v).x(), mesh.vertex(v).y());
    out << buf;
  }
  out << "triangles " << mesh.num_triangles() << "\n";
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& v = mesh.triangle(t).v;
    out << t << ' ' << v[0] << ' ' << v[1] << ' ' << v[2] << "\n";
  }
}

void write_mesh_vtk(const Mesh& mesh, const std::string& path, const std::vector<double>* cell_data,
                    const std::string& cell_data_name) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_mesh_vtk: cannot open " + path);
  out << "# vtk DataFile Version 2.0\ncdafem mesh\nASCII\nDATASET UNSTRUCTURED_GRID\n";
  out << "POINTS " << mesh.num_vertices() << " double\n";
  char buf[160];
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g 0\n", mesh.vertex(v).x(), mesh.vertex(v).y());
    out << buf;
  }
  out << "CELLS " << mesh.num_triangles() << ' ' << 4 * mesh.num_triangles() << "\n";
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& v = mesh.triangle(t).v;
    out << "3 " << v[0] << ' ' << v[1] << ' ' << v[2] << "\n";
  }
  out << "CELL_TYPES " << mesh.num_triangles() << "\n";
  for (int t = 0; t < mesh.num_triangles(); ++t) out << "5\n";
  if (cell_data) {
    out << "CELL_DATA " << mesh.num_triangles() << "\n";
    out << "SCALARS " << cell_data_name << " double 1\nLOOKUP_TABLE default\n";
    for (double x : *cell_data) {
      std::snprintf(buf, sizeof buf, "%.12g\n", x);
      out << buf;
    }
  }
}

}  // namespace cdafem
