#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trisurf/complex.hpp"
#include "trisurf/error.hpp"
#include "trisurf/io.hpp"
#include "trisurf/permutation.hpp"

namespace trisurf {

struct EquivelarType {
  int p = 0;  // every face is a p-cycle
  int q = 0;  // every vertex lies in q faces
  friend bool operator==(const EquivelarType&, const EquivelarType&) = default;
};

/// Rotates a cyclic sequence to start at its least entry and reflects it so
/// that the second entry is the smaller of the two candidates.
inline std::vector<VertexId> canonical_cycle(std::vector<VertexId> face) {
  auto it = std::min_element(face.begin(), face.end());
  std::rotate(face.begin(), it, face.end());
  if (face.size() > 2 && face.back() < face[1]) std::reverse(face.begin() + 1, face.end());
  return face;
}

/// A polyhedral map: faces are cycles on vertices 0..n-1, every edge lies in
/// exactly two faces, the faces around every vertex form one cycle, and two
/// distinct faces meet in nothing, one vertex, or one common edge.
class PolyhedralMap {
 public:
  PolyhedralMap() = default;

  explicit PolyhedralMap(std::vector<std::vector<VertexId>> faces) {
    if (faces.empty()) throw SurfaceError(ErrorKind::EmptyInput, "no faces");
    std::vector<VertexId> labels;
    for (const auto& f : faces) labels.insert(labels.end(), f.begin(), f.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (auto& f : faces) {
      for (auto& x : f) {
        x = static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), x) -
                                  labels.begin());
      }
      f = canonical_cycle(std::move(f));
    }
    std::sort(faces.begin(), faces.end());
    n_ = static_cast<int>(labels.size());
    faces_ = std::move(faces);
    validate();
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edge_faces_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  const std::vector<std::vector<VertexId>>& faces() const { return faces_; }

  /// The two faces on edge ab.
  const std::vector<int>& faces_on_edge(VertexId a, VertexId b) const {
    return edge_faces_.at({std::min(a, b), std::max(a, b)});
  }

  /// Faces around v in cyclic order.
  const std::vector<int>& fan(VertexId v) const { return fans_.at(v); }

  friend bool operator==(const PolyhedralMap& a, const PolyhedralMap& b) {
    return a.n_ == b.n_ && a.faces_ == b.faces_;
  }

 private:
  static std::pair<VertexId, VertexId> key(VertexId a, VertexId b) {
    return {std::min(a, b), std::max(a, b)};
  }

  void validate() {
    auto fail = [](const std::string& why) { throw SurfaceError(ErrorKind::InvalidMap, why); };
    std::vector<std::vector<int>> at_vertex(n_);
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      const auto& f = faces_[i];
      if (f.size() < 3) fail("face with fewer than 3 vertices");
      std::set<VertexId> distinct(f.begin(), f.end());
      if (distinct.size() != f.size()) fail("face boundary repeats a vertex");
      for (std::size_t j = 0; j < f.size(); ++j) {
        edge_faces_[key(f[j], f[(j + 1) % f.size()])].push_back(static_cast<int>(i));
        at_vertex[f[j]].push_back(static_cast<int>(i));
      }
    }
    for (const auto& [e, fs] : edge_faces_) {
      if (fs.size() != 2) {
        fail("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + " lies in " +
             std::to_string(fs.size()) + " faces");
      }
    }
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      std::set<VertexId> fi(faces_[i].begin(), faces_[i].end());
      for (std::size_t j = i + 1; j < faces_.size(); ++j) {
        std::vector<VertexId> shared;
        for (VertexId x : faces_[j]) {
          if (fi.contains(x)) shared.push_back(x);
        }
        if (shared.size() > 2) fail("two faces share more than two vertices");
        if (shared.size() == 2) {
          const auto& fs = edge_faces_.find(key(shared[0], shared[1]));
          bool common_edge = fs != edge_faces_.end() &&
                             std::find(fs->second.begin(), fs->second.end(), static_cast<int>(i)) != fs->second.end() &&
                             std::find(fs->second.begin(), fs->second.end(), static_cast<int>(j)) != fs->second.end();
          if (!common_edge) fail("two faces meet in two vertices that are not a common edge");
        }
      }
    }
    // Walk the faces around each vertex by edge-face pairing.
    fans_.resize(n_);
    for (VertexId v = 0; v < n_; ++v) {
      const auto& around = at_vertex[v];
      std::vector<int> fan{around.front()};
      int cur = around.front();
      VertexId through = neighbour_in_face(cur, v, +1);
      while (true) {
        const auto& pair = edge_faces_.at(key(v, through));
        int next = pair[0] == cur ? pair[1] : pair[0];
        if (next == around.front()) break;
        fan.push_back(next);
        VertexId fwd = neighbour_in_face(next, v, +1);
        VertexId back = neighbour_in_face(next, v, -1);
        through = fwd == through ? back : fwd;
        cur = next;
        if (fan.size() > around.size()) break;
      }
      if (fan.size() != around.size()) fail("faces around vertex " + std::to_string(v) + " do not form one cycle");
      fans_[v] = std::move(fan);
    }
  }

  VertexId neighbour_in_face(int face, VertexId v, int step) const {
    const auto& f = faces_[face];
    const int len = static_cast<int>(f.size());
    int pos = static_cast<int>(std::find(f.begin(), f.end(), v) - f.begin());
    return f[((pos + step) % len + len) % len];
  }

  int n_ = 0;
  std::vector<std::vector<VertexId>> faces_;
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> edge_faces_;
  std::vector<std::vector<int>> fans_;
};

inline PolyhedralMap from_triangulation(const Complex& k) {
  auto report = is_combinatorial_2_manifold(k);
  if (!report.is_manifold) throw SurfaceError(ErrorKind::NotManifold, report.reason);
  std::vector<std::vector<VertexId>> faces;
  for (const auto& f : k.faces()) faces.push_back({f[0], f[1], f[2]});
  return PolyhedralMap(std::move(faces));
}

/// Dual vertex i is primal face i (faces are kept in canonical order); the
/// dual face of a primal vertex is its fan of faces.
inline PolyhedralMap dual(const PolyhedralMap& m) {
  std::vector<std::vector<VertexId>> faces;
  faces.reserve(m.num_vertices());
  for (VertexId v = 0; v < m.num_vertices(); ++v) faces.push_back(m.fan(v));
  return PolyhedralMap(std::move(faces));
}

inline int map_euler_characteristic(const PolyhedralMap& m) {
  return m.num_vertices() - m.num_edges() + m.num_faces();
}

inline std::optional<EquivelarType> equivelar_type(const PolyhedralMap& m) {
  const int p = static_cast<int>(m.faces().front().size());
  for (const auto& f : m.faces()) {
    if (static_cast<int>(f.size()) != p) return std::nullopt;
  }
  const int q = static_cast<int>(m.fan(0).size());
  for (VertexId v = 1; v < m.num_vertices(); ++v) {
    if (static_cast<int>(m.fan(v).size()) != q) return std::nullopt;
  }
  return EquivelarType{p, q};
}

// ---------------------------------------------------------------------------
// Map isomorphism by flag propagation: fix a flag (face, corner, direction)
// of M1, try every flag of M2 as its image, and push the correspondence
// across edges to neighbouring faces until it is total or contradicts itself.

namespace detail {

inline std::optional<std::vector<VertexId>> propagate_map(const PolyhedralMap& m1,
                                                          const PolyhedralMap& m2, int face2,
                                                          int offset, int direction) {
  std::vector<VertexId> vmap(m1.num_vertices(), -1);
  std::vector<VertexId> vinv(m2.num_vertices(), -1);
  std::vector<int> fmap(m1.num_faces(), -1);
  std::vector<bool> fused(m2.num_faces(), false);

  auto bind_vertex = [&](VertexId a, VertexId b) {
    if (vmap[a] < 0 && vinv[b] < 0) {
      vmap[a] = b;
      vinv[b] = a;
      return true;
    }
    return vmap[a] == b && vinv[b] == a;
  };

  std::queue<int> queue;
  auto bind_face = [&](int f1, int f2, int off, int dir) {
    const auto& s1 = m1.faces()[f1];
    const auto& s2 = m2.faces()[f2];
    if (s1.size() != s2.size()) return false;
    if (fmap[f1] >= 0) {
      if (fmap[f1] != f2) return false;
    } else {
      if (fused[f2]) return false;
      fmap[f1] = f2;
      fused[f2] = true;
      queue.push(f1);
    }
    const int len = static_cast<int>(s1.size());
    for (int i = 0; i < len; ++i) {
      if (!bind_vertex(s1[i], s2[((off + dir * i) % len + len) % len])) return false;
    }
    return true;
  };

  if (!bind_face(0, face2, offset, direction)) return std::nullopt;
  while (!queue.empty()) {
    const int f1 = queue.front();
    queue.pop();
    const auto& s1 = m1.faces()[f1];
    const int len = static_cast<int>(s1.size());
    for (int i = 0; i < len; ++i) {
      const VertexId a = s1[i];
      const VertexId b = s1[(i + 1) % len];
      const auto& pair1 = m1.faces_on_edge(a, b);
      const int g1 = pair1[0] == f1 ? pair1[1] : pair1[0];
      const auto& pair2 = m2.faces_on_edge(vmap[a], vmap[b]);
      const int own = fmap[f1];
      if (pair2[0] != own && pair2[1] != own) return std::nullopt;
      const int g2 = pair2[0] == own ? pair2[1] : pair2[0];
      // Align g1 onto g2 so that a -> vmap[a] and b -> vmap[b].
      const auto& t1 = m1.faces()[g1];
      const auto& t2 = m2.faces()[g2];
      if (t1.size() != t2.size()) return std::nullopt;
      const int l = static_cast<int>(t1.size());
      const int pa = static_cast<int>(std::find(t1.begin(), t1.end(), a) - t1.begin());
      const int pb = static_cast<int>(std::find(t1.begin(), t1.end(), b) - t1.begin());
      const int qa = static_cast<int>(std::find(t2.begin(), t2.end(), vmap[a]) - t2.begin());
      const int qb = static_cast<int>(std::find(t2.begin(), t2.end(), vmap[b]) - t2.begin());
      const int s1dir = (pa + 1) % l == pb ? 1 : -1;
      const int s2dir = (qa + 1) % l == qb ? 1 : -1;
      const int dir = s1dir * s2dir;
      // position k in t1 maps to qa + dir * (k - pa)
      const int off = ((qa - dir * pa) % l + l) % l;
      if (!bind_face(g1, g2, off, dir)) return std::nullopt;
    }
  }
  for (VertexId x : vmap) {
    if (x < 0) return std::nullopt;
  }
  return vmap;
}

}  // namespace detail

inline std::optional<Permutation> maps_isomorphic(const PolyhedralMap& m1, const PolyhedralMap& m2) {
  if (m1.num_vertices() != m2.num_vertices() || m1.num_edges() != m2.num_edges() ||
      m1.num_faces() != m2.num_faces()) {
    return std::nullopt;
  }
  const int len = static_cast<int>(m1.faces().front().size());
  for (int g = 0; g < m2.num_faces(); ++g) {
    if (static_cast<int>(m2.faces()[g].size()) != len) continue;
    for (int off = 0; off < len; ++off) {
      for (int dir : {1, -1}) {
        auto vmap = detail::propagate_map(m1, m2, g, off, dir);
        if (!vmap) continue;
        std::set<std::vector<VertexId>> image;
        for (const auto& f : m1.faces()) {
          std::vector<VertexId> mapped;
          for (VertexId x : f) mapped.push_back((*vmap)[x]);
          image.insert(canonical_cycle(std::move(mapped)));
        }
        if (std::equal(image.begin(), image.end(), m2.faces().begin(), m2.faces().end())) {
          return Permutation(*vmap);
        }
      }
    }
  }
  return std::nullopt;
}

inline PolyhedralMap relabel(const PolyhedralMap& m, const Permutation& p) {
  std::vector<std::vector<VertexId>> faces;
  for (const auto& f : m.faces()) {
    std::vector<VertexId> mapped;
    for (VertexId x : f) mapped.push_back(p(x));
    faces.push_back(std::move(mapped));
  }
  return PolyhedralMap(std::move(faces));
}

// ---------------------------------------------------------------------------
// Map text format: one face per line as a cyclic label sequence.

namespace io {

inline PolyhedralMap parse_map(std::istream& in) {
  auto rows = read_label_lines(in);
  for (const auto& r : rows) {
    if (r.size() < 3) throw SurfaceError(ErrorKind::Parse, "map face needs at least 3 labels");
  }
  return PolyhedralMap(std::move(rows));
}

inline PolyhedralMap parse_map(const std::string& text) {
  std::istringstream in(text);
  return parse_map(in);
}

inline std::string write_map(const PolyhedralMap& m) {
  std::ostringstream out;
  for (const auto& f : m.faces()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace io

}  // namespace trisurf
