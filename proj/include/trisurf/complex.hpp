#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trisurf/error.hpp"
#include "trisurf/permutation.hpp"

namespace trisurf {

/// An unordered triple of distinct vertices, stored sorted.
class Triangle {
 public:
  Triangle() = default;
  Triangle(VertexId a, VertexId b, VertexId c) : v_{a, b, c} {
    if (a == b || b == c || a == c) {
      throw SurfaceError(ErrorKind::DegenerateFace,
                         "face (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ") repeats a label");
    }
    std::sort(v_.begin(), v_.end());
  }

  VertexId operator[](std::size_t i) const { return v_[i]; }
  const std::array<VertexId, 3>& vertices() const { return v_; }
  bool contains(VertexId x) const { return v_[0] == x || v_[1] == x || v_[2] == x; }

  /// The vertex of this face that is neither a nor b.
  VertexId opposite(VertexId a, VertexId b) const {
    for (VertexId x : v_) {
      if (x != a && x != b) return x;
    }
    return -1;
  }

  friend auto operator<=>(const Triangle&, const Triangle&) = default;

 private:
  std::array<VertexId, 3> v_{0, 1, 2};
};

struct FVector {
  int f0 = 0;
  int f1 = 0;
  int f2 = 0;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Link of a vertex as a cyclic sequence of its neighbours.
struct LinkCycle {
  VertexId vertex = 0;
  std::vector<VertexId> cycle;
};

/// An abstract pure 2-dimensional simplicial complex on vertices 0..n-1.
/// Immutable after construction.
class Complex {
 public:
  Complex() = default;

  /// Labels are normalized to a dense range [0, n) preserving their numeric
  /// order; duplicate faces collapse.
  static Complex from_faces(std::span<const std::array<VertexId, 3>> face_list) {
    if (face_list.empty()) throw SurfaceError(ErrorKind::EmptyInput, "no faces");
    std::vector<VertexId> labels;
    for (const auto& f : face_list) {
      for (VertexId x : f) {
        if (x < 0) throw SurfaceError(ErrorKind::Parse, "negative vertex label");
        labels.push_back(x);
      }
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto rank = [&](VertexId x) {
      return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), x) -
                                   labels.begin());
    };
    std::vector<Triangle> faces;
    faces.reserve(face_list.size());
    for (const auto& f : face_list) faces.emplace_back(rank(f[0]), rank(f[1]), rank(f[2]));
    return Complex(static_cast<int>(labels.size()), std::move(faces));
  }

  static Complex from_faces(const std::vector<std::array<VertexId, 3>>& face_list) {
    return from_faces(std::span<const std::array<VertexId, 3>>(face_list));
  }

  /// Faces already on the dense label range [0, n).
  Complex(int n, std::vector<Triangle> faces) : n_(n), faces_(std::move(faces)) {
    if (faces_.empty()) throw SurfaceError(ErrorKind::EmptyInput, "no faces");
    std::sort(faces_.begin(), faces_.end());
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    adjacency_.assign(static_cast<std::size_t>(n_) * n_, 0);
    neighbors_.assign(n_, {});
    faces_at_.assign(n_, {});
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      const auto& f = faces_[i];
      for (VertexId x : f.vertices()) {
        if (x < 0 || x >= n_) throw SurfaceError(ErrorKind::UnknownVertex, "label out of range");
        faces_at_[x].push_back(static_cast<int>(i));
      }
      for (auto [a, b] : {std::pair{f[0], f[1]}, std::pair{f[0], f[2]}, std::pair{f[1], f[2]}}) {
        if (!adjacency_[a * n_ + b]) {
          adjacency_[a * n_ + b] = adjacency_[b * n_ + a] = 1;
          neighbors_[a].push_back(b);
          neighbors_[b].push_back(a);
          edges_.emplace_back(a, b);
        }
      }
    }
    for (VertexId v = 0; v < n_; ++v) {
      if (faces_at_[v].empty()) {
        throw SurfaceError(ErrorKind::UnknownVertex,
                           "vertex " + std::to_string(v) + " lies in no face");
      }
      std::sort(neighbors_[v].begin(), neighbors_[v].end());
    }
    std::sort(edges_.begin(), edges_.end());
  }

  int num_vertices() const { return n_; }
  const std::vector<Triangle>& faces() const { return faces_; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_.at(v); }
  const std::vector<int>& faces_at(VertexId v) const { return faces_at_.at(v); }
  int degree(VertexId v) const { return static_cast<int>(neighbors_.at(v).size()); }

  bool has_edge(VertexId a, VertexId b) const {
    return a >= 0 && b >= 0 && a < n_ && b < n_ && adjacency_[a * n_ + b] != 0;
  }

  bool has_face(const Triangle& t) const {
    return std::binary_search(faces_.begin(), faces_.end(), t);
  }

  bool contains_vertex(VertexId v) const { return v >= 0 && v < n_; }

  /// Third vertices of the faces containing edge ab.
  std::vector<VertexId> faces_on_edge(VertexId a, VertexId b) const {
    std::vector<VertexId> out;
    for (int fi : faces_at_.at(a)) {
      if (faces_[fi].contains(b)) out.push_back(faces_[fi].opposite(a, b));
    }
    return out;
  }

  FVector f_vector() const {
    return {n_, static_cast<int>(edges_.size()), static_cast<int>(faces_.size())};
  }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.n_ == b.n_ && a.faces_ == b.faces_;
  }

 private:
  int n_ = 0;
  std::vector<Triangle> faces_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<std::vector<int>> faces_at_;
};

/// Image of K under the vertex bijection p.
inline Complex relabel(const Complex& k, const Permutation& p) {
  std::vector<Triangle> faces;
  faces.reserve(k.faces().size());
  for (const auto& f : k.faces()) faces.emplace_back(p(f[0]), p(f[1]), p(f[2]));
  return Complex(k.num_vertices(), std::move(faces));
}

inline bool is_automorphism(const Complex& k, const Permutation& p) {
  if (p.size() != k.num_vertices()) return false;
  for (const auto& f : k.faces()) {
    if (!k.has_face(Triangle(p(f[0]), p(f[1]), p(f[2])))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Links.

/// Link of v: vertices are the neighbours of v, xy is an edge iff vxy is a face.
/// `labels[i]` is the complex vertex carried by local vertex i.
struct LinkGraph {
  std::vector<VertexId> labels;
  std::vector<std::pair<int, int>> edges;  // local indices, a < b
};

inline LinkGraph link_of(const Complex& k, VertexId v) {
  if (!k.contains_vertex(v)) throw SurfaceError(ErrorKind::UnknownVertex, std::to_string(v));
  LinkGraph out;
  out.labels = k.neighbors(v);
  auto local = [&](VertexId x) {
    return static_cast<int>(std::lower_bound(out.labels.begin(), out.labels.end(), x) -
                            out.labels.begin());
  };
  for (int fi : k.faces_at(v)) {
    const auto& f = k.faces()[fi];
    VertexId a = -1;
    VertexId b = -1;
    for (VertexId x : f.vertices()) {
      if (x == v) continue;
      (a < 0 ? a : b) = x;
    }
    out.edges.emplace_back(local(a), local(b));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

namespace detail {

// Walks the link of v as a cycle; returns nullopt and a reason when it is not one.
inline std::optional<std::vector<VertexId>> walk_link(const Complex& k, VertexId v,
                                                      std::string* reason) {
  const auto& nbrs = k.neighbors(v);
  std::map<VertexId, std::vector<VertexId>> link_adj;
  for (int fi : k.faces_at(v)) {
    const auto& f = k.faces()[fi];
    VertexId a = -1;
    VertexId b = -1;
    for (VertexId x : f.vertices()) {
      if (x == v) continue;
      (a < 0 ? a : b) = x;
    }
    link_adj[a].push_back(b);
    link_adj[b].push_back(a);
  }
  for (VertexId x : nbrs) {
    if (link_adj[x].size() != 2) {
      if (reason) {
        *reason = "link of " + std::to_string(v) + " has vertex " + std::to_string(x) +
                  " of degree " + std::to_string(link_adj[x].size());
      }
      return std::nullopt;
    }
  }
  std::vector<VertexId> cycle{nbrs.front()};
  VertexId prev = nbrs.front();
  VertexId cur = std::min(link_adj[prev][0], link_adj[prev][1]);
  while (cur != nbrs.front()) {
    cycle.push_back(cur);
    const auto& adj = link_adj[cur];
    VertexId next = adj[0] == prev ? adj[1] : adj[0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != nbrs.size()) {
    if (reason) *reason = "link of " + std::to_string(v) + " is disconnected";
    return std::nullopt;
  }
  return cycle;
}

}  // namespace detail

/// The link of v as a cycle, starting at the smallest neighbour and heading
/// towards the smaller of its two cycle neighbours.
inline LinkCycle link_cycle(const Complex& k, VertexId v) {
  if (!k.contains_vertex(v)) throw SurfaceError(ErrorKind::UnknownVertex, std::to_string(v));
  std::string reason;
  auto cycle = detail::walk_link(k, v, &reason);
  if (!cycle) throw SurfaceError(ErrorKind::NotACycle, reason);
  return {v, std::move(*cycle)};
}

struct ManifoldReport {
  bool is_manifold = false;
  std::optional<VertexId> offending_vertex;
  std::string reason;
};

inline ManifoldReport is_combinatorial_2_manifold(const Complex& k) {
  for (VertexId v = 0; v < k.num_vertices(); ++v) {
    std::string reason;
    if (!detail::walk_link(k, v, &reason)) return {false, v, reason};
  }
  return {true, std::nullopt, {}};
}

inline bool is_connected(const Complex& k) {
  std::vector<bool> seen(k.num_vertices(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : k.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == k.num_vertices();
}

// ---------------------------------------------------------------------------
// Counting invariants.

inline int euler_characteristic(const Complex& k) {
  auto f = k.f_vector();
  return f.f0 - f.f1 + f.f2;
}

inline std::optional<int> degree_regular_type(const Complex& k) {
  int d = k.degree(0);
  for (VertexId v = 1; v < k.num_vertices(); ++v) {
    if (k.degree(v) != d) return std::nullopt;
  }
  return d;
}

/// Number of distinct faces meeting at least one vertex of `subset`.
inline int star_union_face_count(const Complex& k, std::span<const VertexId> subset) {
  if (subset.empty()) throw SurfaceError(ErrorKind::EmptyInput, "empty vertex set");
  std::vector<bool> hit(k.faces().size(), false);
  int count = 0;
  for (VertexId v : subset) {
    if (!k.contains_vertex(v)) throw SurfaceError(ErrorKind::UnknownVertex, std::to_string(v));
    for (int fi : k.faces_at(v)) {
      if (!hit[fi]) {
        hit[fi] = true;
        ++count;
      }
    }
  }
  return count;
}

inline int star_union_face_count(const Complex& k, std::initializer_list<VertexId> subset) {
  return star_union_face_count(k, std::span<const VertexId>(subset.begin(), subset.size()));
}

// ---------------------------------------------------------------------------
// Orientation.

/// A cyclic vertex order per face, indexed like Complex::faces().
struct OrientationAssignment {
  std::vector<std::array<VertexId, 3>> oriented;

  /// +1 when face i is positively oriented in its stored (sorted) order.
  int sign(std::size_t face_index) const {
    const auto& o = oriented[face_index];
    // A 3-cycle is an even permutation of its rotations.
    int inversions = (o[0] > o[1]) + (o[0] > o[2]) + (o[1] > o[2]);
    return inversions % 2 == 0 ? 1 : -1;
  }
};

struct OrientabilityResult {
  bool orientable = false;
  OrientationAssignment assignment;      // valid when orientable
  std::pair<VertexId, VertexId> conflict_edge{-1, -1};
  std::vector<Triangle> obstruction;     // closed face path reversing orientation
};

namespace detail {

inline bool induces(const std::array<VertexId, 3>& o, VertexId a, VertexId b) {
  for (int i = 0; i < 3; ++i) {
    if (o[i] == a && o[(i + 1) % 3] == b) return true;
  }
  return false;
}

inline std::array<VertexId, 3> orient_against(const Triangle& f, VertexId a, VertexId b) {
  // The neighbour across ab must traverse it as b -> a.
  return {b, a, f.opposite(a, b)};
}

}  // namespace detail

/// Propagates an orientation breadth-first from the least face, which is
/// oriented by its sorted vertex order.
inline OrientabilityResult orientability(const Complex& k) {
  auto report = is_combinatorial_2_manifold(k);
  if (!report.is_manifold) throw SurfaceError(ErrorKind::NotManifold, report.reason);
  if (!is_connected(k)) throw SurfaceError(ErrorKind::NotConnected, "complex is disconnected");

  const auto& faces = k.faces();
  const std::size_t m = faces.size();
  std::vector<std::optional<std::array<VertexId, 3>>> oriented(m);
  std::vector<int> parent(m, -1);
  std::queue<int> queue;
  oriented[0] = faces[0].vertices();
  queue.push(0);

  auto index_of = [&](const Triangle& t) {
    return static_cast<int>(std::lower_bound(faces.begin(), faces.end(), t) - faces.begin());
  };
  auto path_to_root = [&](int fi) {
    std::vector<Triangle> path;
    for (int x = fi; x >= 0; x = parent[x]) path.push_back(faces[x]);
    return path;
  };

  while (!queue.empty()) {
    int fi = queue.front();
    queue.pop();
    const auto o = *oriented[fi];
    for (int i = 0; i < 3; ++i) {
      VertexId a = o[i];
      VertexId b = o[(i + 1) % 3];
      for (VertexId c : k.faces_on_edge(a, b)) {
        Triangle neighbour(a, b, c);
        int ni = index_of(neighbour);
        if (ni == fi) continue;
        if (!oriented[ni]) {
          oriented[ni] = detail::orient_against(neighbour, a, b);
          parent[ni] = fi;
          queue.push(ni);
        } else if (detail::induces(*oriented[ni], a, b)) {
          OrientabilityResult bad;
          bad.conflict_edge = {std::min(a, b), std::max(a, b)};
          auto left = path_to_root(fi);
          auto right = path_to_root(ni);
          std::reverse(left.begin(), left.end());
          bad.obstruction = std::move(left);
          bad.obstruction.insert(bad.obstruction.end(), right.begin(), right.end());
          return bad;
        }
      }
    }
  }
  OrientabilityResult good;
  good.orientable = true;
  good.assignment.oriented.reserve(m);
  for (const auto& o : oriented) good.assignment.oriented.push_back(*o);
  return good;
}

/// True when every edge is traversed in opposite directions by its two faces.
inline bool is_coherent(const Complex& k, const OrientationAssignment& orientation) {
  if (orientation.oriented.size() != k.faces().size()) return false;
  std::map<std::pair<VertexId, VertexId>, int> directed;
  for (std::size_t i = 0; i < k.faces().size(); ++i) {
    const auto& o = orientation.oriented[i];
    if (Triangle(o[0], o[1], o[2]) != k.faces()[i]) return false;
    for (int j = 0; j < 3; ++j) {
      if (++directed[{o[j], o[(j + 1) % 3]}] > 1) return false;
    }
  }
  for (const auto& [edge, count] : directed) {
    if (!directed.contains({edge.second, edge.first})) return false;
  }
  return true;
}

inline int genus(const Complex& k) {
  auto result = orientability(k);
  if (!result.orientable) throw SurfaceError(ErrorKind::NotOrientable, "genus needs orientable input");
  int chi = euler_characteristic(k);
  if ((2 - chi) % 2 != 0) throw SurfaceError(ErrorKind::OddParity, "2 - chi is odd");
  return (2 - chi) / 2;
}

// ---------------------------------------------------------------------------
// Parameter arithmetic: chi = n - nd/2 + nd/3 = n(6 - d)/6.

struct SurfaceParameters {
  int n = 0;
  int d = 0;
  friend auto operator<=>(const SurfaceParameters&, const SurfaceParameters&) = default;
};

struct EquivelarParameters {
  int n = 0;  // vertices
  int p = 0;  // face length
  int q = 0;  // faces per vertex
  friend auto operator<=>(const EquivelarParameters&, const EquivelarParameters&) = default;
};

inline bool feasible_degree_regular(int n, int d) {
  return d >= 3 && n > d && (n * d) % 6 == 0;
}

/// (n, d) for degree-regular triangulations with Euler characteristic chi.
/// chi == 0 is an infinite family; it is cut off at `max_vertices`.
inline std::vector<SurfaceParameters> admissible_parameters(int chi, int max_vertices = 12) {
  std::vector<SurfaceParameters> out;
  if (chi > 2) return out;
  if (chi == 0) {
    for (int n = 7; n <= max_vertices; ++n) out.push_back({n, 6});
    return out;
  }
  // n * (6 - d) == 6 * chi with d != 6.
  for (int d = 3; d <= 6 + 6 * std::abs(chi); ++d) {
    if (d == 6) continue;
    int num = 6 * chi;
    int den = 6 - d;
    if (num % den != 0) continue;
    int n = num / den;
    if (n > 0 && feasible_degree_regular(n, d)) out.push_back({n, d});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// (n, p, q) for {p,q}-equivelar polyhedral maps with Euler characteristic chi,
/// subject to edges + face diagonals fitting in C(n, 2).
inline std::vector<EquivelarParameters> admissible_equivelar_parameters(int chi,
                                                                        int max_vertices = 12) {
  std::vector<EquivelarParameters> out;
  if (chi > 2) return out;
  auto admissible = [](long long n, long long p, long long q) {
    if (n <= p || (n * q) % 2 != 0 || (n * q) % p != 0) return false;
    return n * q * (p - 3) / 2 + n * q / 2 <= n * (n - 1) / 2;
  };
  const int a = std::abs(chi);
  const int p_max = chi == 0 ? max_vertices : 2 * a + 6;
  const int q_max = chi == 0 ? max_vertices : 6 * a + 6;
  for (int p = 3; p <= p_max; ++p) {
    for (int q = 3; q <= q_max; ++q) {
      // chi = n (2p - pq + 2q) / (2p)
      long long den = 2LL * p - 1LL * p * q + 2LL * q;
      if (chi == 0) {
        if (den != 0) continue;
        for (int n = p + 1; n <= max_vertices; ++n) {
          if (admissible(n, p, q)) out.push_back({n, p, q});
        }
        continue;
      }
      long long num = 2LL * p * chi;
      if (den == 0 || num % den != 0) continue;
      long long n = num / den;
      if (n > 0 && admissible(n, p, q)) out.push_back({static_cast<int>(n), p, q});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace trisurf
