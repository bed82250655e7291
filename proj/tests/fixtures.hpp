#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "trisurf/trisurf.hpp"

namespace fixtures {

using trisurf::Complex;
using trisurf::Permutation;
using trisurf::PolyhedralMap;
using trisurf::Triangle;
using trisurf::VertexId;
using Faces = std::vector<std::array<VertexId, 3>>;

inline Complex tetrahedron() { return Complex::from_faces(Faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

// Poles 0 and 5 over the square 1 2 3 4.
inline Complex octahedron() {
  Faces f;
  for (int i = 0; i < 4; ++i) {
    const int a = 1 + i;
    const int b = 1 + (i + 1) % 4;
    f.push_back({0, a, b});
    f.push_back({5, a, b});
  }
  return Complex::from_faces(f);
}

inline int ico_upper(int i) { return 1 + (i % 5 + 5) % 5; }
inline int ico_lower(int i) { return 6 + (i % 5 + 5) % 5; }

// 0; upper ring 1..5; lower ring 6..10; 11.
inline Complex icosahedron() {
  Faces f;
  for (int i = 0; i < 5; ++i) {
    f.push_back({0, ico_upper(i), ico_upper(i + 1)});
    f.push_back({11, ico_lower(i), ico_lower(i + 1)});
    f.push_back({ico_upper(i), ico_upper(i + 1), ico_lower(i)});
    f.push_back({ico_lower(i), ico_lower(i + 1), ico_upper(i + 1)});
  }
  return Complex::from_faces(f);
}

// Antipodal involution of icosahedron(): 0 <-> 11, upper i <-> lower i+2.
inline Permutation ico_antipode() {
  std::vector<VertexId> img(12);
  img[0] = 11;
  img[11] = 0;
  for (int i = 0; i < 5; ++i) {
    img[ico_upper(i)] = ico_lower(i + 2);
    img[ico_lower(i + 2)] = ico_upper(i);
  }
  return Permutation(img);
}

// 6-vertex real projective plane as the quotient of the icosahedron by its
// antipodal map.
inline Complex rp2_6() {
  const Complex ico = icosahedron();
  const Permutation a = ico_antipode();
  auto cls = [&](VertexId x) { return std::min(x, a(x)); };
  Faces f;
  for (const auto& t : ico.faces()) f.push_back({cls(t[0]), cls(t[1]), cls(t[2])});
  return Complex::from_faces(f);
}

// 7-vertex torus.
inline Complex torus7() {
  Faces f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return Complex::from_faces(f);
}

// Two tetrahedron boundaries sharing the face 012.
inline Complex glued_tetrahedra() {
  return Complex::from_faces(
      Faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 4}, {0, 2, 4}, {1, 2, 4}});
}

// Tetrahedron with the face 123 subdivided at a new vertex 4.
inline Complex stellar_tetrahedron() {
  return Complex::from_faces(Faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

inline PolyhedralMap cube() {
  return PolyhedralMap({{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}});
}

inline Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<VertexId> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

/// Applies random edge flips {a,b,c},{a,b,d} -> {a,c,d},{b,c,d} that keep the
/// complex a combinatorial 2-manifold.
inline Complex random_flips(const Complex& start, int flips, std::mt19937& rng) {
  std::set<Triangle> faces(start.faces().begin(), start.faces().end());
  const int n = start.num_vertices();
  for (int done = 0, tries = 0; done < flips && tries < flips * 50; ++tries) {
    const Complex k(n, {faces.begin(), faces.end()});
    const auto edges = k.edges();
    const auto [a, b] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    if (k.degree(a) <= 3 || k.degree(b) <= 3) continue;
    const auto on = k.faces_on_edge(a, b);
    if (on.size() != 2) continue;
    const VertexId c = on[0];
    const VertexId d = on[1];
    if (k.has_edge(c, d)) continue;
    faces.erase(Triangle(a, b, c));
    faces.erase(Triangle(a, b, d));
    faces.emplace(a, c, d);
    faces.emplace(b, c, d);
    ++done;
  }
  return Complex(n, {faces.begin(), faces.end()});
}

inline std::filesystem::path catalog_dir() { return TRISURF_CATALOG_DIR; }

inline const std::vector<trisurf::CatalogEntry>& catalog() {
  static const auto entries = trisurf::load_catalog(catalog_dir());
  return entries;
}

inline const Complex& named(const std::string& name) { return trisurf::find_entry(catalog(), name).complex; }

}  // namespace fixtures
