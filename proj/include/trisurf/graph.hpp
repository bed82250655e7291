#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "trisurf/complex.hpp"

namespace trisurf {

/// Undirected graph on 0..n-1 without loops or parallel edges.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n)
      : n_(n), matrix_(static_cast<std::size_t>(n) * n, 0), adj_(n) {}

  void add_edge(VertexId a, VertexId b) {
    if (a == b || adjacent(a, b)) return;
    matrix_[a * n_ + b] = matrix_[b * n_ + a] = 1;
    adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a), a);
    ++num_edges_;
  }

  int size() const { return n_; }
  int num_edges() const { return num_edges_; }
  bool adjacent(VertexId a, VertexId b) const { return matrix_[a * n_ + b] != 0; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId a = 0; a < n_; ++a) {
      for (VertexId b : adj_[a]) {
        if (a < b) out.emplace_back(a, b);
      }
    }
    return out;
  }

  friend bool operator==(const SimpleGraph& x, const SimpleGraph& y) {
    return x.n_ == y.n_ && x.matrix_ == y.matrix_;
  }

 private:
  int n_ = 0;
  int num_edges_ = 0;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<VertexId>> adj_;
};

inline SimpleGraph edge_graph(const Complex& k) {
  SimpleGraph g(k.num_vertices());
  for (auto [a, b] : k.edges()) g.add_edge(a, b);
  return g;
}

inline int common_neighbor_count(const SimpleGraph& g, VertexId u, VertexId v) {
  const auto& nu = g.neighbors(u);
  const auto& nv = g.neighbors(v);
  int count = 0;
  auto i = nu.begin();
  auto j = nv.begin();
  while (i != nu.end() && j != nv.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

/// G_k(G): u ~ v (u != v) iff u and v have exactly k common neighbours in G,
/// whether or not they are adjacent in G.
inline SimpleGraph common_neighbor_graph(const SimpleGraph& g, int k) {
  SimpleGraph out(g.size());
  for (VertexId u = 0; u < g.size(); ++u) {
    for (VertexId v = u + 1; v < g.size(); ++v) {
      if (common_neighbor_count(g, u, v) == k) out.add_edge(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shapes.

struct ComponentShape {
  enum class Kind { Cycle = 0, Path = 1, Other = 2, Isolated = 3 };
  Kind kind = Kind::Isolated;
  int size = 1;
  std::string certificate;  // only for Other

  std::string to_string() const {
    switch (kind) {
      case Kind::Cycle: return "C" + std::to_string(size);
      case Kind::Path: return "P" + std::to_string(size);
      case Kind::Isolated: return "I";
      case Kind::Other: return "O" + std::to_string(size) + "[" + certificate + "]";
    }
    return "?";
  }

  // Cycles, then paths, then other, then isolated; larger components first.
  friend bool operator<(const ComponentShape& a, const ComponentShape& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.size != b.size) return a.size > b.size;
    return a.certificate < b.certificate;
  }
  friend bool operator==(const ComponentShape&, const ComponentShape&) = default;
};

/// Multiset of component descriptors; invariant under graph isomorphism.
struct GraphShape {
  std::vector<std::pair<ComponentShape, int>> components;  // sorted, with multiplicities

  int vertex_count() const {
    int total = 0;
    for (const auto& [c, m] : components) total += c.size * m;
    return total;
  }

  /// e.g. "3×P2+6×I", "C12", "2×C6".
  std::string to_string() const {
    std::string out;
    for (const auto& [c, m] : components) {
      if (!out.empty()) out += "+";
      if (m > 1) out += std::to_string(m) + "×";
      out += c.to_string();
    }
    return out;
  }

  friend bool operator==(const GraphShape&, const GraphShape&) = default;
};

namespace detail {

/// Canonical certificate of a small graph: the lexicographically least string
/// of upper-triangle adjacency bits, listed column by column, over all vertex
/// orderings. Partial orderings that pick the same vertex set and give every
/// remaining vertex the same adjacency signature have identical futures and
/// are merged.
inline std::string canonical_certificate(const SimpleGraph& g, const std::vector<VertexId>& verts) {
  const int m = static_cast<int>(verts.size());
  struct State {
    std::uint64_t chosen = 0;
    std::vector<int> order;
  };
  std::vector<State> frontier{State{}};
  std::string best_prefix;
  for (int level = 0; level < m; ++level) {
    std::string level_best;
    bool have_best = false;
    std::map<std::pair<std::uint64_t, std::vector<std::uint64_t>>, State> next;
    for (const auto& s : frontier) {
      for (int c = 0; c < m; ++c) {
        if (s.chosen >> c & 1U) continue;
        std::string column;
        for (int pos : s.order) column += g.adjacent(verts[pos], verts[c]) ? '1' : '0';
        if (have_best && column > level_best) continue;
        if (!have_best || column < level_best) {
          level_best = column;
          have_best = true;
          next.clear();
        }
        State t = s;
        t.chosen |= std::uint64_t{1} << c;
        t.order.push_back(c);
        std::vector<std::uint64_t> signature;
        for (int r = 0; r < m; ++r) {
          if (t.chosen >> r & 1U) continue;
          std::uint64_t sig = 0;
          for (std::size_t i = 0; i < t.order.size(); ++i) {
            if (g.adjacent(verts[t.order[i]], verts[r])) sig |= std::uint64_t{1} << i;
          }
          signature.push_back(sig);
        }
        next.emplace(std::make_pair(t.chosen, std::move(signature)), std::move(t));
      }
    }
    best_prefix += level_best;
    frontier.clear();
    for (auto& [key, s] : next) frontier.push_back(std::move(s));
  }
  // Pack bits as hex for compactness.
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < best_prefix.size(); i += 4) {
    int nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble = nibble * 2 + (i + j < best_prefix.size() && best_prefix[i + j] == '1');
    }
    out += hex[nibble];
  }
  return out;
}

}  // namespace detail

inline std::vector<std::vector<VertexId>> connected_components(const SimpleGraph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<VertexId> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (VertexId y : g.neighbors(members[i])) {
        if (comp[y] < 0) {
          comp[y] = comp[s];
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline GraphShape graph_shape(const SimpleGraph& g) {
  std::map<ComponentShape, int> counts;
  for (const auto& members : connected_components(g)) {
    ComponentShape c;
    c.size = static_cast<int>(members.size());
    int edges = 0;
    int max_degree = 0;
    for (VertexId x : members) {
      edges += g.degree(x);
      max_degree = std::max(max_degree, g.degree(x));
    }
    edges /= 2;
    if (c.size == 1) {
      c.kind = ComponentShape::Kind::Isolated;
    } else if (max_degree <= 2 && edges == c.size - 1) {
      c.kind = ComponentShape::Kind::Path;
    } else if (max_degree == 2 && edges == c.size) {
      c.kind = ComponentShape::Kind::Cycle;
    } else {
      c.kind = ComponentShape::Kind::Other;
      c.certificate = detail::canonical_certificate(g, members);
    }
    ++counts[c];
  }
  GraphShape shape;
  for (auto& [c, m] : counts) shape.components.emplace_back(c, m);
  return shape;
}

/// Shapes of G_k(EG(K)) for k = 0 .. n-2.
struct Fingerprint {
  std::vector<GraphShape> shapes;  // index k

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const Complex& k) {
  const SimpleGraph eg = edge_graph(k);
  Fingerprint fp;
  for (int c = 0; c <= std::max(0, k.num_vertices() - 2); ++c) {
    fp.shapes.push_back(graph_shape(common_neighbor_graph(eg, c)));
  }
  return fp;
}

/// Per-vertex isomorphism invariant: degree followed by the degree of the
/// vertex in every G_k(EG(K)).
inline std::vector<std::vector<int>> vertex_invariants(const Complex& k) {
  const SimpleGraph eg = edge_graph(k);
  const int n = k.num_vertices();
  std::vector<std::vector<int>> inv(n, std::vector<int>(n + 1, 0));
  for (VertexId u = 0; u < n; ++u) {
    inv[u][0] = eg.degree(u);
    for (VertexId v = 0; v < n; ++v) {
      if (u != v) ++inv[u][1 + common_neighbor_count(eg, u, v)];
    }
  }
  return inv;
}

}  // namespace trisurf
