#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "trisurf/error.hpp"

namespace trisurf {

using VertexId = int;

/// A bijection of {0, ..., n-1}. Composition follows function notation:
/// (p * q)(x) == p(q(x)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<VertexId> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (VertexId x : image_) {
      if (x < 0 || static_cast<std::size_t>(x) >= image_.size() || seen[x]) {
        throw SurfaceError(ErrorKind::Parse, "permutation image is not a bijection");
      }
      seen[x] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<VertexId> image(n);
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
  }

  /// Builds a permutation from disjoint cycles; (a, b, c) sends a->b->c->a.
  static Permutation from_cycles(int n, const std::vector<std::vector<VertexId>>& cycles) {
    std::vector<VertexId> image(n);
    std::iota(image.begin(), image.end(), 0);
    std::vector<bool> moved(n, false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        VertexId from = cycle[i];
        VertexId to = cycle[(i + 1) % cycle.size()];
        if (from < 0 || from >= n || to < 0 || to >= n || moved[from]) {
          throw SurfaceError(ErrorKind::Parse, "cycles are not disjoint or out of range");
        }
        moved[from] = true;
        image[from] = to;
      }
    }
    return Permutation(std::move(image));
  }

  int size() const { return static_cast<int>(image_.size()); }
  VertexId operator()(VertexId x) const { return image_[x]; }
  const std::vector<VertexId>& image() const { return image_; }

  Permutation operator*(const Permutation& rhs) const {
    std::vector<VertexId> out(image_.size());
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = image_[rhs.image_[x]];
    return Permutation(std::move(out));
  }

  Permutation inverse() const {
    std::vector<VertexId> out(image_.size());
    for (std::size_t x = 0; x < out.size(); ++x) out[image_[x]] = static_cast<VertexId>(x);
    return Permutation(std::move(out));
  }

  Permutation pow(int k) const {
    Permutation result = identity(size());
    Permutation base = k < 0 ? inverse() : *this;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) result = result * base;
    return result;
  }

  bool is_identity() const {
    for (std::size_t x = 0; x < image_.size(); ++x) {
      if (image_[x] != static_cast<VertexId>(x)) return false;
    }
    return true;
  }

  /// Order as a group element (lcm of cycle lengths).
  int order() const {
    long long result = 1;
    for (int len : cycle_type()) result = std::lcm(result, static_cast<long long>(len));
    return static_cast<int>(result);
  }

  std::vector<std::vector<VertexId>> cycles() const {
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t start = 0; start < image_.size(); ++start) {
      if (seen[start]) continue;
      std::vector<VertexId> cycle;
      for (VertexId x = static_cast<VertexId>(start); !seen[x]; x = image_[x]) {
        seen[x] = true;
        cycle.push_back(x);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  std::vector<int> cycle_type() const {
    std::vector<int> lengths;
    for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
    return lengths;
  }

  /// Cycle notation without fixed points; the identity prints as "()".
  std::string to_cycle_string() const {
    std::ostringstream out;
    for (const auto& cycle : cycles()) {
      if (cycle.size() < 2) continue;
      out << '(';
      for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? "," : "") << cycle[i];
      out << ')';
    }
    std::string s = out.str();
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<VertexId> image_;
};

}  // namespace trisurf
