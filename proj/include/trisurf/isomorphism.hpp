#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trisurf/complex.hpp"
#include "trisurf/graph.hpp"
#include "trisurf/permutation.hpp"

namespace trisurf {

// ---------------------------------------------------------------------------
// Canonical form.
//
// On a connected combinatorial 2-manifold a relabeling is pinned down by the
// image of one flag (v, w, x) with vwx a face: v gets label 0, the link of v
// is labeled walking from w towards x, and every later vertex u is processed
// in label order, walking its link from its least-labeled neighbour a towards
// the smaller-labeled of a's two link neighbours. The canonical form is the
// least sorted face list over all 6 * f2 flags, and the flags that reach it
// are exactly the automorphisms.

struct Flag {
  VertexId vertex;
  VertexId edge_end;   // the edge is {vertex, edge_end}
  VertexId face_apex;  // the face is {vertex, edge_end, face_apex}
  friend auto operator<=>(const Flag&, const Flag&) = default;
};

inline std::vector<Flag> flags_of(const Complex& k) {
  std::vector<Flag> out;
  for (const auto& f : k.faces()) {
    const auto& v = f.vertices();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        out.push_back({v[i], v[j], v[3 - i - j]});
      }
    }
  }
  return out;
}

struct CanonicalForm {
  std::vector<Triangle> faces;           // sorted, on labels 0..n-1
  Permutation labeling;                  // K -> canonical labels
  std::vector<Permutation> automorphisms;  // all of Aut(K), sorted
};

namespace detail {

struct LinkTable {
  // cycle position lookups: next/prev neighbour of x in the link of u
  std::vector<std::vector<VertexId>> cycle;
  std::vector<std::vector<int>> position;  // position[u][x], -1 if not a neighbour
};

inline LinkTable link_table(const Complex& k) {
  const int n = k.num_vertices();
  LinkTable t;
  t.cycle.resize(n);
  t.position.assign(n, std::vector<int>(n, -1));
  for (VertexId u = 0; u < n; ++u) {
    t.cycle[u] = link_cycle(k, u).cycle;
    for (std::size_t i = 0; i < t.cycle[u].size(); ++i) t.position[u][t.cycle[u][i]] = static_cast<int>(i);
  }
  return t;
}

inline std::vector<VertexId> flag_labeling(const Complex& k, const LinkTable& t, const Flag& flag) {
  const int n = k.num_vertices();
  std::vector<VertexId> label(n, -1);
  std::vector<VertexId> by_label;
  by_label.reserve(n);
  auto assign = [&](VertexId x) {
    if (label[x] < 0) {
      label[x] = static_cast<VertexId>(by_label.size());
      by_label.push_back(x);
    }
  };
  assign(flag.vertex);
  for (std::size_t next = 0; next < by_label.size(); ++next) {
    const VertexId u = by_label[next];
    const auto& cyc = t.cycle[u];
    const int len = static_cast<int>(cyc.size());
    VertexId start;
    int step;
    if (next == 0) {
      start = flag.edge_end;
      int ps = t.position[u][start];
      step = cyc[(ps + 1) % len] == flag.face_apex ? 1 : -1;
    } else {
      start = -1;
      for (VertexId x : cyc) {
        if (label[x] >= 0 && (start < 0 || label[x] < label[start])) start = x;
      }
      int ps = t.position[u][start];
      VertexId fwd = cyc[(ps + 1) % len];
      VertexId back = cyc[(ps + len - 1) % len];
      step = label[fwd] < label[back] ? 1 : -1;
    }
    int ps = t.position[u][start];
    for (int i = 0; i < len; ++i) assign(cyc[((ps + step * i) % len + len) % len]);
  }
  if (static_cast<int>(by_label.size()) != n) {
    throw SurfaceError(ErrorKind::NotConnected, "complex is disconnected");
  }
  return label;
}

inline std::vector<Triangle> relabeled_faces(const Complex& k, const std::vector<VertexId>& label) {
  std::vector<Triangle> out;
  out.reserve(k.faces().size());
  for (const auto& f : k.faces()) out.emplace_back(label[f[0]], label[f[1]], label[f[2]]);
  std::sort(out.begin(), out.end());
  return out;
}

inline void require_connected_manifold(const Complex& k) {
  auto report = is_combinatorial_2_manifold(k);
  if (!report.is_manifold) throw SurfaceError(ErrorKind::NotManifold, report.reason);
  if (!is_connected(k)) throw SurfaceError(ErrorKind::NotConnected, "complex is disconnected");
}

}  // namespace detail

inline CanonicalForm canonical_form(const Complex& k) {
  detail::require_connected_manifold(k);
  const auto table = detail::link_table(k);
  CanonicalForm best;
  std::vector<std::vector<VertexId>> minimizers;
  for (const Flag& flag : flags_of(k)) {
    auto label = detail::flag_labeling(k, table, flag);
    auto faces = detail::relabeled_faces(k, label);
    if (minimizers.empty() || faces < best.faces) {
      best.faces = std::move(faces);
      minimizers.clear();
      minimizers.push_back(std::move(label));
    } else if (faces == best.faces) {
      minimizers.push_back(std::move(label));
    }
  }
  best.labeling = Permutation(minimizers.front());
  const Permutation base = best.labeling;
  for (const auto& m : minimizers) best.automorphisms.push_back(Permutation(m).inverse() * base);
  std::sort(best.automorphisms.begin(), best.automorphisms.end());
  return best;
}

inline Complex canonical_complex(const Complex& k) {
  auto form = canonical_form(k);
  return Complex(k.num_vertices(), std::move(form.faces));
}

// ---------------------------------------------------------------------------
// Direct isomorphism search, independent of the canonical form: vertices of
// K1 are mapped one at a time in breadth-first order, candidates filtered by
// the G_k-degree invariants, partial maps checked on edges and faces.

inline std::optional<Permutation> are_isomorphic(const Complex& k1, const Complex& k2) {
  const int n = k1.num_vertices();
  if (n != k2.num_vertices() || k1.f_vector() != k2.f_vector()) return std::nullopt;
  const auto inv1 = vertex_invariants(k1);
  const auto inv2 = vertex_invariants(k2);
  {
    auto s1 = inv1;
    auto s2 = inv2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  // Start from the rarest invariant class, then breadth-first.
  std::vector<VertexId> order;
  {
    std::vector<int> freq(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      freq[v] = static_cast<int>(std::count(inv1.begin(), inv1.end(), inv1[v]));
    }
    std::vector<bool> placed(n, false);
    while (static_cast<int>(order.size()) < n) {
      VertexId root = -1;
      for (VertexId v = 0; v < n; ++v) {
        if (!placed[v] && (root < 0 || freq[v] < freq[root])) root = v;
      }
      std::size_t head = order.size();
      order.push_back(root);
      placed[root] = true;
      for (; head < order.size(); ++head) {
        for (VertexId y : k1.neighbors(order[head])) {
          if (!placed[y]) {
            placed[y] = true;
            order.push_back(y);
          }
        }
      }
    }
  }

  std::vector<VertexId> map(n, -1);
  std::vector<bool> used(n, false);
  std::vector<int> rank(n, 0);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;

  auto consistent = [&](int depth) {
    const VertexId x = order[depth];
    const VertexId y = map[x];
    for (int i = 0; i < depth; ++i) {
      const VertexId a = order[i];
      if (k1.has_edge(x, a) != k2.has_edge(y, map[a])) return false;
    }
    for (int fi : k1.faces_at(x)) {
      const auto& f = k1.faces()[fi];
      bool all_mapped = true;
      for (VertexId z : f.vertices()) all_mapped = all_mapped && rank[z] <= depth;
      if (all_mapped && !k2.has_face(Triangle(map[f[0]], map[f[1]], map[f[2]]))) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const VertexId x = order[depth];
    for (VertexId y = 0; y < n; ++y) {
      if (used[y] || inv1[x] != inv2[y]) continue;
      map[x] = y;
      used[y] = true;
      if (consistent(depth) && self(self, depth + 1)) return true;
      used[y] = false;
      map[x] = -1;
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  Permutation witness(map);
  if (relabel(k1, witness) != k2) return std::nullopt;
  return witness;
}

// ---------------------------------------------------------------------------
// Automorphism groups.

struct GroupId {
  enum class Kind { Trivial, Cyclic, Dihedral, KleinFour, Other };
  Kind kind = Kind::Trivial;
  int parameter = 1;  // m for Cyclic(m) / Dihedral(m) (order 2m), else the order

  std::string to_string() const {
    switch (kind) {
      case Kind::Trivial: return "Trivial";
      case Kind::Cyclic: return "Cyclic(" + std::to_string(parameter) + ")";
      case Kind::Dihedral: return "Dihedral(" + std::to_string(parameter) + ")";
      case Kind::KleinFour: return "KleinFour";
      case Kind::Other: return "Other(" + std::to_string(parameter) + ")";
    }
    return "?";
  }

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

struct AutGroup {
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted, identity first

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
  }
};

/// Closure of a set of permutations under composition.
inline std::vector<Permutation> generate_group(int n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        Permutation h = s * g;
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Picks generators greedily: an element joins when it is not already in the
/// subgroup generated so far. Elements of larger order are tried first.
inline std::vector<Permutation> small_generating_set(const std::vector<Permutation>& elements) {
  if (elements.empty()) return {};
  const int n = elements.front().size();
  std::vector<Permutation> sorted = elements;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Permutation& a, const Permutation& b) {
    return a.order() > b.order();
  });
  std::vector<Permutation> gens;
  std::set<Permutation> span{Permutation::identity(n)};
  for (const auto& e : sorted) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    auto group = generate_group(n, gens);
    span = {group.begin(), group.end()};
    if (span.size() == elements.size()) break;
  }
  return gens;
}

inline AutGroup automorphism_group(const Complex& k) {
  AutGroup group;
  group.elements = canonical_form(k).automorphisms;
  group.generators = small_generating_set(group.elements);
  return group;
}

/// Census-based identification. Dihedral(m) has order 2m.
inline GroupId identify_group(const std::vector<Permutation>& elements) {
  const int order = static_cast<int>(elements.size());
  if (order == 1) return {GroupId::Kind::Trivial, 1};
  int max_order = 1;
  int exponent = 1;
  for (const auto& g : elements) {
    max_order = std::max(max_order, g.order());
    exponent = std::lcm(exponent, g.order());
  }
  if (max_order == order) return {GroupId::Kind::Cyclic, order};
  if (order == 4 && exponent == 2) return {GroupId::Kind::KleinFour, 4};
  if (order % 2 == 0) {
    const int m = order / 2;
    for (const auto& r : elements) {
      if (r.order() != m) continue;
      const Permutation r_inv = r.inverse();
      const auto rotations = generate_group(r.size(), {r});
      for (const auto& t : elements) {
        if (t.order() != 2 || std::find(rotations.begin(), rotations.end(), t) != rotations.end()) {
          continue;
        }
        if (t * r * t == r_inv) return {GroupId::Kind::Dihedral, m};
      }
    }
  }
  return {GroupId::Kind::Other, order};
}

inline GroupId identify_group(const AutGroup& g) { return identify_group(g.elements); }

// ---------------------------------------------------------------------------
// Orientation characters and transitivity.

/// +1 when p carries positively oriented faces to positively oriented faces,
/// -1 when it reverses all of them.
inline int orientation_character(const Complex& k, const OrientationAssignment& orientation,
                                 const Permutation& p) {
  if (!is_automorphism(k, p)) throw SurfaceError(ErrorKind::NotAutomorphism, p.to_cycle_string());
  const auto& faces = k.faces();
  int character = 0;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& o = orientation.oriented[i];
    const std::array<VertexId, 3> image{p(o[0]), p(o[1]), p(o[2])};
    const Triangle target(image[0], image[1], image[2]);
    const auto j = static_cast<std::size_t>(
        std::lower_bound(faces.begin(), faces.end(), target) - faces.begin());
    const int c = detail::induces(orientation.oriented[j], image[0], image[1]) ? 1 : -1;
    if (character == 0) {
      character = c;
    } else if (c != character) {
      throw SurfaceError(ErrorKind::NotOrientable, "orientation assignment is not coherent");
    }
  }
  return character;
}

inline int orientation_character(const Complex& k, const Permutation& p) {
  auto result = orientability(k);
  if (!result.orientable) throw SurfaceError(ErrorKind::NotOrientable, "complex is non-orientable");
  return orientation_character(k, result.assignment, p);
}

inline std::vector<std::vector<VertexId>> vertex_orbits(const Complex& k, const AutGroup& group) {
  const int n = k.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> out;
  for (VertexId v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::set<VertexId> orbit;
    for (const auto& g : group.elements) orbit.insert(g(v));
    for (VertexId x : orbit) seen[x] = true;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

/// Orbits of Aut(K) on flags (vertex in edge in face).
inline std::vector<std::vector<Flag>> flag_orbits(const Complex& k, const AutGroup& group) {
  auto flags = flags_of(k);
  std::sort(flags.begin(), flags.end());
  std::vector<bool> seen(flags.size(), false);
  std::vector<std::vector<Flag>> out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (seen[i]) continue;
    std::set<Flag> orbit;
    for (const auto& g : group.elements) {
      orbit.insert({g(flags[i].vertex), g(flags[i].edge_end), g(flags[i].face_apex)});
    }
    for (const auto& f : orbit) {
      seen[std::lower_bound(flags.begin(), flags.end(), f) - flags.begin()] = true;
    }
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

inline bool is_vertex_transitive(const Complex& k, const AutGroup& group) {
  return vertex_orbits(k, group).size() == 1;
}

inline bool is_vertex_transitive(const Complex& k) {
  return is_vertex_transitive(k, automorphism_group(k));
}

inline bool is_flag_transitive(const Complex& k, const AutGroup& group) {
  return flag_orbits(k, group).size() == 1;
}

inline bool is_flag_transitive(const Complex& k) {
  return is_flag_transitive(k, automorphism_group(k));
}

}  // namespace trisurf
