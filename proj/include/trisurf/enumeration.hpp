#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "trisurf/certificate.hpp"
#include "trisurf/complex.hpp"
#include "trisurf/error.hpp"
#include "trisurf/isomorphism.hpp"

namespace trisurf {

/// Search state of the enumerator: a set of faces that can still be completed
/// to a degree-regular combinatorial 2-manifold of type d on n vertices.
///
/// Invariants kept by add_face():
///  - every edge lies in at most two faces;
///  - no vertex has more than d neighbours;
///  - the link of each vertex is a disjoint union of paths, or one cycle
///    through all of its d neighbours (the vertex is then closed).
class PartialComplex {
 public:
  PartialComplex(int n, int d)
      : n_(n),
        d_(d),
        target_faces_(n * d / 3),
        edge_count_(static_cast<std::size_t>(n) * n, 0),
        third_(static_cast<std::size_t>(n) * n * 2, -1),
        degree_(n, 0),
        faces_at_(n, 0),
        closed_(n, false) {}

  /// The usual starting point: lk(0) = C_d(1, ..., d).
  static PartialComplex seeded(int n, int d) {
    PartialComplex state(n, d);
    for (VertexId i = 1; i <= d; ++i) {
      if (!state.add_face(0, i, i == d ? 1 : i + 1)) {
        throw SurfaceError(ErrorKind::InfeasibleParameters, "seed link rejected");
      }
    }
    return state;
  }

  int n() const { return n_; }
  int d() const { return d_; }
  int target_faces() const { return target_faces_; }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int remaining_faces() const { return target_faces_ - num_faces(); }
  const std::vector<Triangle>& faces() const { return faces_; }
  int edge_count(VertexId a, VertexId b) const { return edge_count_[a * n_ + b]; }
  int degree(VertexId v) const { return degree_[v]; }
  int faces_at(VertexId v) const { return faces_at_[v]; }
  bool closed(VertexId v) const { return closed_[v]; }

  /// Smallest vertex not yet in any face; untouched vertices are interchangeable.
  VertexId fresh_vertex() const {
    VertexId v = 0;
    while (v < n_ && degree_[v] > 0) ++v;
    return v;
  }

  int untouched_count() const {
    int count = 0;
    for (VertexId v = 0; v < n_; ++v) count += degree_[v] == 0;
    return count;
  }

  /// Adds face abc when that keeps every invariant; returns false (and leaves
  /// the state unchanged) otherwise.
  bool add_face(VertexId a, VertexId b, VertexId c) {
    if (a == b || b == c || a == c) return false;
    if (a < 0 || b < 0 || c < 0 || a >= n_ || b >= n_ || c >= n_) return false;
    if (num_faces() >= target_faces_) return false;
    if (closed_[a] || closed_[b] || closed_[c]) return false;
    const std::array<std::pair<VertexId, VertexId>, 3> sides{{{a, b}, {a, c}, {b, c}}};
    std::array<int, 3> new_neighbours{0, 0, 0};  // for a, b, c
    for (int i = 0; i < 3; ++i) {
      auto [x, y] = sides[i];
      const int count = edge_count_[x * n_ + y];
      if (count >= 2) return false;
      if (count == 1 && third_[(x * n_ + y) * 2] == sides_opposite(i, a, b, c)) return false;
      if (count == 0) {
        ++new_neighbours[index_in(x, a, b, c)];
        ++new_neighbours[index_in(y, a, b, c)];
      }
    }
    if (degree_[a] + new_neighbours[0] > d_ || degree_[b] + new_neighbours[1] > d_ ||
        degree_[c] + new_neighbours[2] > d_) {
      return false;
    }
    apply(a, b, c);
    std::vector<VertexId> closing;
    for (auto [v, x, y] : {std::array{a, b, c}, std::array{b, a, c}, std::array{c, a, b}}) {
      const int cycle = link_cycle_length(v, x, y);
      if (cycle == 0) continue;
      if (cycle != d_ || degree_[v] != d_) {
        unapply();
        return false;
      }
      closing.push_back(v);
    }
    for (VertexId v : closing) closed_[v] = true;
    closed_log_.push_back(std::move(closing));
    return true;
  }

  void remove_last_face() {
    for (VertexId v : closed_log_.back()) closed_[v] = false;
    closed_log_.pop_back();
    unapply();
  }

  /// Edges lying in exactly one face, as (a, b, apex) with a < b.
  std::vector<std::array<VertexId, 3>> open_edges() const {
    std::vector<std::array<VertexId, 3>> out;
    for (VertexId a = 0; a < n_; ++a) {
      for (VertexId b = a + 1; b < n_; ++b) {
        if (edge_count_[a * n_ + b] == 1) out.push_back({a, b, third_[(a * n_ + b) * 2]});
      }
    }
    return out;
  }

  bool complete() const {
    if (num_faces() != target_faces_) return false;
    for (VertexId v = 0; v < n_; ++v) {
      if (!closed_[v]) return false;
    }
    return true;
  }

  Complex to_complex() const { return Complex(n_, faces_); }

 private:
  static int index_in(VertexId x, VertexId a, VertexId b, VertexId) {
    return x == a ? 0 : (x == b ? 1 : 2);
  }
  static VertexId sides_opposite(int side, VertexId a, VertexId b, VertexId c) {
    return side == 0 ? c : (side == 1 ? b : a);
  }

  void link_edge(VertexId x, VertexId y, VertexId apex) {
    auto add_one = [&](VertexId p, VertexId q) {
      int& count = edge_count_[p * n_ + q];
      if (count == 0) {
        ++degree_[p];
      }
      third_[(p * n_ + q) * 2 + count] = apex;
      ++count;
    };
    add_one(x, y);
    add_one(y, x);
  }

  void unlink_edge(VertexId x, VertexId y) {
    auto remove_one = [&](VertexId p, VertexId q) {
      int& count = edge_count_[p * n_ + q];
      --count;
      third_[(p * n_ + q) * 2 + count] = -1;
      if (count == 0) --degree_[p];
    };
    remove_one(x, y);
    remove_one(y, x);
  }

  void apply(VertexId a, VertexId b, VertexId c) {
    link_edge(a, b, c);
    link_edge(a, c, b);
    link_edge(b, c, a);
    ++faces_at_[a];
    ++faces_at_[b];
    ++faces_at_[c];
    faces_.emplace_back(a, b, c);
  }

  void unapply() {
    const Triangle t = faces_.back();
    faces_.pop_back();
    unlink_edge(t[1], t[2]);
    unlink_edge(t[0], t[2]);
    unlink_edge(t[0], t[1]);
    --faces_at_[t[0]];
    --faces_at_[t[1]];
    --faces_at_[t[2]];
  }

  /// After adding face vxy: length of the cycle through link edge xy in lk(v),
  /// or 0 when that component is a path.
  int link_cycle_length(VertexId v, VertexId x, VertexId y) const {
    int length = 1;
    VertexId prev = x;
    VertexId cur = y;
    while (cur != x) {
      const std::size_t base = static_cast<std::size_t>(v * n_ + cur) * 2;
      if (edge_count_[v * n_ + cur] < 2) return 0;
      VertexId next = third_[base] == prev ? third_[base + 1] : third_[base];
      prev = cur;
      cur = next;
      ++length;
      if (length > n_) return 0;
    }
    return length;
  }

  int n_;
  int d_;
  int target_faces_;
  std::vector<int> edge_count_;
  std::vector<VertexId> third_;
  std::vector<int> degree_;
  std::vector<int> faces_at_;
  std::vector<bool> closed_;
  std::vector<Triangle> faces_;
  std::vector<std::vector<VertexId>> closed_log_;
};

/// Face-budget bound: every vertex v still needs r(v) = d - faces_at(v) new
/// faces, and two vertices share at most two faces, three at most one more,
/// so the faces still to be placed must number at least
///   r1, r1 + r2 - 2, and r1 + r2 + r3 - 6
/// for the three largest needs. For untouched vertices this is d, 2d - 2 and
/// 3d - 6 (12 and 15 when d = 7).
inline bool prune_star_bound(const PartialComplex& state) {
  std::array<int, 3> top{0, 0, 0};
  for (VertexId v = 0; v < state.n(); ++v) {
    int need = state.d() - state.faces_at(v);
    for (int i = 0; i < 3; ++i) {
      if (need > top[i]) std::swap(need, top[i]);
    }
  }
  const int remaining = state.remaining_faces();
  if (remaining < top[0]) return true;
  if (top[1] > 0 && remaining < top[0] + top[1] - 2) return true;
  if (top[2] > 0 && remaining < top[0] + top[1] + top[2] - 6) return true;
  return false;
}

struct SearchConfig {
  bool orientable_only = false;
  bool prune_star_bound = true;
  int parallel_width = 0;  // depth at which subtrees become independent tasks
  int jobs = 1;
  std::optional<std::size_t> limit;  // stop after this many classes
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t dead_ends = 0;
  std::uint64_t star_bound_prunes = 0;
  std::uint64_t non_orientable = 0;
  std::uint64_t duplicates = 0;

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    leaves += o.leaves;
    dead_ends += o.dead_ends;
    star_bound_prunes += o.star_bound_prunes;
    non_orientable += o.non_orientable;
    duplicates += o.duplicates;
    return *this;
  }
};

struct ClassRecord {
  Complex complex;  // canonical labeling
  Certificate certificate;
};

struct ClassificationResult {
  int n = 0;
  int d = 0;
  std::vector<ClassRecord> classes;  // sorted by canonical face list
  SearchStats stats;
  bool exhaustive = true;
};

namespace detail {

using FaceList = std::vector<Triangle>;

class Searcher {
 public:
  Searcher(const SearchConfig& config, std::map<FaceList, Complex>& found, SearchStats& stats)
      : config_(config), found_(found), stats_(stats) {}

  /// Candidates to glue onto open edge ab whose current face has apex c.
  std::vector<VertexId> extensions(PartialComplex& state, const std::array<VertexId, 3>& e) const {
    std::vector<VertexId> out;
    const VertexId fresh = state.fresh_vertex();
    for (VertexId x = 0; x < state.n(); ++x) {
      if (x == e[0] || x == e[1] || x == e[2]) continue;
      if (state.degree(x) == 0 && x != fresh) continue;
      if (state.add_face(e[0], e[1], x)) {
        out.push_back(x);
        state.remove_last_face();
      }
    }
    return out;
  }

  /// Most constrained open edge and its extensions; empty optional at a leaf.
  std::optional<std::pair<std::array<VertexId, 3>, std::vector<VertexId>>> branch(
      PartialComplex& state) const {
    std::optional<std::pair<std::array<VertexId, 3>, std::vector<VertexId>>> best;
    for (const auto& e : state.open_edges()) {
      auto ext = extensions(state, e);
      if (!best || ext.size() < best->second.size()) {
        best.emplace(e, std::move(ext));
        if (best->second.empty()) break;
      }
    }
    return best;
  }

  bool stop() const { return config_.limit && found_.size() >= *config_.limit; }

  void record_leaf(const PartialComplex& state) {
    ++stats_.leaves;
    Complex k = state.to_complex();
    if (config_.orientable_only && !orientability(k).orientable) {
      ++stats_.non_orientable;
      return;
    }
    auto form = canonical_form(k);
    auto [it, inserted] = found_.try_emplace(form.faces, k.num_vertices(), form.faces);
    if (!inserted) ++stats_.duplicates;
  }

  void run(PartialComplex& state) {
    if (stop()) return;
    ++stats_.nodes;
    if (config_.prune_star_bound && prune_star_bound(state)) {
      ++stats_.star_bound_prunes;
      return;
    }
    auto choice = branch(state);
    if (!choice) {
      if (state.complete()) {
        record_leaf(state);
      } else {
        ++stats_.dead_ends;
      }
      return;
    }
    const auto& [edge, ext] = *choice;
    if (ext.empty()) {
      ++stats_.dead_ends;
      return;
    }
    for (VertexId x : ext) {
      state.add_face(edge[0], edge[1], x);
      run(state);
      state.remove_last_face();
      if (stop()) return;
    }
  }

  /// Collects the face sequences leading to the nodes at `depth`.
  void frontier(PartialComplex& state, int depth, FaceList& path, std::vector<FaceList>& out) {
    if (depth == 0) {
      out.push_back(path);
      return;
    }
    ++stats_.nodes;
    if (config_.prune_star_bound && prune_star_bound(state)) {
      ++stats_.star_bound_prunes;
      return;
    }
    auto choice = branch(state);
    if (!choice || choice->second.empty()) {
      out.push_back(path);  // leaf or dead end: let a task finish it
      --stats_.nodes;
      return;
    }
    const auto& [edge, ext] = *choice;
    for (VertexId x : ext) {
      state.add_face(edge[0], edge[1], x);
      path.emplace_back(edge[0], edge[1], x);
      frontier(state, depth - 1, path, out);
      path.pop_back();
      state.remove_last_face();
    }
  }

 private:
  const SearchConfig& config_;
  std::map<FaceList, Complex>& found_;
  SearchStats& stats_;
};

}  // namespace detail

/// All isomorphism classes of connected degree-regular combinatorial
/// 2-manifolds of type d on n vertices (orientable ones only when
/// configured), each once, in canonical labeling, sorted by face list.
inline ClassificationResult enumerate_degree_regular(int n, int d, const SearchConfig& config = {}) {
  if (!feasible_degree_regular(n, d)) {
    throw SurfaceError(ErrorKind::InfeasibleParameters,
                       "(n, d) = (" + std::to_string(n) + ", " + std::to_string(d) +
                           ") needs d >= 3, n > d and nd divisible by 6");
  }
  if (n > 64) throw SurfaceError(ErrorKind::InfeasibleParameters, "n too large");

  ClassificationResult result;
  result.n = n;
  result.d = d;
  std::map<detail::FaceList, Complex> found;

  PartialComplex root = PartialComplex::seeded(n, d);
  if (config.parallel_width <= 0) {
    detail::Searcher searcher(config, found, result.stats);
    searcher.run(root);
  } else {
    std::vector<detail::FaceList> tasks;
    {
      detail::FaceList path;
      detail::Searcher searcher(config, found, result.stats);
      searcher.frontier(root, config.parallel_width, path, tasks);
    }
    std::vector<std::map<detail::FaceList, Complex>> local_found(tasks.size());
    std::vector<SearchStats> local_stats(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t t = next++; t < tasks.size(); t = next++) {
        PartialComplex state = PartialComplex::seeded(n, d);
        for (const auto& f : tasks[t]) state.add_face(f[0], f[1], f[2]);
        detail::Searcher searcher(config, local_found[t], local_stats[t]);
        searcher.run(state);
      }
    };
    const int jobs = std::max(1, config.jobs);
    std::vector<std::thread> threads;
    for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
    worker();
    for (auto& th : threads) th.join();
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      result.stats += local_stats[t];
      for (auto& [faces, k] : local_found[t]) {
        if (!found.emplace(faces, std::move(k)).second) ++result.stats.duplicates;
      }
    }
  }

  for (auto& [faces, k] : found) {
    if (config.limit && result.classes.size() >= *config.limit) {
      result.exhaustive = false;
      break;
    }
    result.classes.push_back({k, certify(k)});
  }
  if (config.limit && found.size() >= *config.limit) result.exhaustive = false;
  return result;
}

/// Runs the enumerator for every (n, d) admissible at Euler characteristic chi.
inline std::vector<ClassificationResult> classify_chi(int chi, const SearchConfig& config = {},
                                                      int max_vertices = 12) {
  std::vector<ClassificationResult> out;
  for (const auto& params : admissible_parameters(chi, max_vertices)) {
    out.push_back(enumerate_degree_regular(params.n, params.d, config));
  }
  return out;
}

}  // namespace trisurf
