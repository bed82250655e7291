#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "trisurf/trisurf.hpp"

using namespace trisurf;

namespace {

// Counts face-preserving bijections by extending a partial map one vertex at
// a time and rejecting as soon as a fully mapped face misses the target.
int brute_force_aut_order(const Complex& k) {
  const int n = k.num_vertices();
  std::vector<VertexId> img(n, -1);
  std::vector<bool> used(n, false);
  int count = 0;
  std::function<void(int)> go = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (VertexId x = 0; x < n; ++x) {
      if (used[x] || k.degree(x) != k.degree(v)) continue;
      img[v] = x;
      bool ok = true;
      for (int fi : k.faces_at(v)) {
        const auto& f = k.faces()[fi];
        if (img[f[0]] < 0 || img[f[1]] < 0 || img[f[2]] < 0) continue;
        if (!k.has_face(Triangle(img[f[0]], img[f[1]], img[f[2]]))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[x] = true;
        go(v + 1);
        used[x] = false;
      }
      img[v] = -1;
    }
  };
  go(0);
  return count;
}

bool maps_onto(const Complex& a, const Complex& b, const Permutation& w) { return relabel(a, w) == b; }

}  // namespace

TEST(Flags, Count) {
  EXPECT_EQ(flags_of(fixtures::named("N1")).size(), 168u);
  EXPECT_EQ(flags_of(fixtures::tetrahedron()).size(), 24u);
}

TEST(AreIsomorphic, CatalogPairwiseDistinct) {
  const auto& cat = fixtures::catalog();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto self = are_isomorphic(cat[i].complex, cat[i].complex);
    ASSERT_TRUE(self.has_value());
    EXPECT_TRUE(maps_onto(cat[i].complex, cat[i].complex, *self));
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      EXPECT_FALSE(are_isomorphic(cat[i].complex, cat[j].complex).has_value()) << cat[i].name << " " << cat[j].name;
    }
  }
}

TEST(AreIsomorphic, WitnessForRelabeledCopy) {
  std::mt19937 rng(17);
  for (const auto& e : fixtures::catalog()) {
    for (int t = 0; t < 5; ++t) {
      const Permutation pi = fixtures::random_permutation(12, rng);
      const Complex moved = relabel(e.complex, pi);
      const auto w = are_isomorphic(e.complex, moved);
      ASSERT_TRUE(w.has_value());
      EXPECT_TRUE(maps_onto(e.complex, moved, *w));
      // w followed by pi^{-1} fixes K.
      EXPECT_TRUE(is_automorphism(e.complex, pi.inverse() * *w));
    }
  }
}

TEST(AreIsomorphic, DifferentSizes) {
  EXPECT_FALSE(are_isomorphic(fixtures::tetrahedron(), fixtures::octahedron()).has_value());
  EXPECT_FALSE(are_isomorphic(fixtures::glued_tetrahedra(), fixtures::stellar_tetrahedron()).has_value());
}

TEST(CanonicalForm, Tetrahedron) {
  const auto form = canonical_form(fixtures::tetrahedron());
  EXPECT_EQ(form.faces, (std::vector<Triangle>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  EXPECT_EQ(form.automorphisms.size(), 24u);
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937 rng(23);
  std::vector<Complex> ks{fixtures::icosahedron(), fixtures::torus7(), fixtures::rp2_6()};
  for (const auto& e : fixtures::catalog()) ks.push_back(e.complex);
  for (const auto& k : ks) {
    const auto base = canonical_form(k);
    EXPECT_EQ(relabel(k, base.labeling), Complex(k.num_vertices(), base.faces));
    for (int t = 0; t < 10; ++t) {
      const Complex moved = relabel(k, fixtures::random_permutation(k.num_vertices(), rng));
      EXPECT_EQ(canonical_form(moved).faces, base.faces);
    }
  }
}

TEST(CanonicalForm, RejectsNonManifold) {
  EXPECT_THROW(canonical_form(fixtures::glued_tetrahedra()), SurfaceError);
}

TEST(AutomorphismGroup, CatalogStructures) {
  const std::map<std::string, std::pair<int, std::string>> expected{
      {"N1", {12, "Cyclic(12)"}}, {"N2", {12, "Cyclic(12)"}}, {"N3", {12, "Dihedral(6)"}},
      {"N4", {2, "Cyclic(2)"}},   {"N5", {6, "Dihedral(3)"}}, {"N6", {4, "KleinFour"}}};
  for (const auto& e : fixtures::catalog()) {
    const AutGroup g = automorphism_group(e.complex);
    EXPECT_EQ(g.order(), expected.at(e.name).first) << e.name;
    EXPECT_EQ(identify_group(g).to_string(), expected.at(e.name).second) << e.name;
    EXPECT_EQ(g.order(), brute_force_aut_order(e.complex)) << e.name;
    for (const auto& p : g.elements) EXPECT_TRUE(is_automorphism(e.complex, p));
    EXPECT_EQ(generate_group(12, g.generators).size(), g.elements.size());
  }
}

TEST(AutomorphismGroup, N4InvolutionFixesTwoVertices) {
  const AutGroup g = automorphism_group(fixtures::named("N4"));
  ASSERT_EQ(g.order(), 2);
  const Permutation& inv = g.elements[1];
  int fixed = 0;
  for (VertexId v = 0; v < 12; ++v) fixed += inv(v) == v;
  EXPECT_EQ(fixed, 2);
}

TEST(AutomorphismGroup, SmallSolidsAgainstBruteForce) {
  EXPECT_EQ(automorphism_group(fixtures::icosahedron()).order(), 120);
  EXPECT_EQ(brute_force_aut_order(fixtures::icosahedron()), 120);
  EXPECT_EQ(automorphism_group(fixtures::octahedron()).order(), brute_force_aut_order(fixtures::octahedron()));
  EXPECT_EQ(automorphism_group(fixtures::torus7()).order(), brute_force_aut_order(fixtures::torus7()));
  EXPECT_EQ(automorphism_group(fixtures::rp2_6()).order(), brute_force_aut_order(fixtures::rp2_6()));
}

TEST(IdentifyGroup, Census) {
  const int n = 8;
  EXPECT_EQ(identify_group(generate_group(n, {})).kind, GroupId::Kind::Trivial);
  const auto c8 = Permutation::from_cycles(n, {{0, 1, 2, 3, 4, 5, 6, 7}});
  EXPECT_EQ(identify_group(generate_group(n, {c8})).to_string(), "Cyclic(8)");
  const auto flip = Permutation::from_cycles(n, {{1, 7}, {2, 6}, {3, 5}});
  EXPECT_EQ(identify_group(generate_group(n, {c8, flip})).to_string(), "Dihedral(8)");
  const auto a = Permutation::from_cycles(n, {{0, 1}, {2, 3}});
  const auto b = Permutation::from_cycles(n, {{0, 2}, {1, 3}});
  EXPECT_EQ(identify_group(generate_group(n, {a, b})).to_string(), "KleinFour");
  // Z2 x Z4 is none of the named families.
  const auto z4 = Permutation::from_cycles(n, {{4, 5, 6, 7}});
  const auto z2 = Permutation::from_cycles(n, {{0, 1}});
  EXPECT_EQ(identify_group(generate_group(n, {z4, z2})).to_string(), "Other(8)");
  // S3 is D3.
  const auto r = Permutation::from_cycles(3, {{0, 1, 2}});
  const auto s = Permutation::from_cycles(3, {{1, 2}});
  EXPECT_EQ(identify_group(generate_group(3, {r, s})).to_string(), "Dihedral(3)");
}

TEST(OrientationCharacter, IdentityAndErrors) {
  for (const auto& e : fixtures::catalog()) {
    EXPECT_EQ(orientation_character(e.complex, Permutation::identity(12)), 1);
  }
  try {
    orientation_character(fixtures::named("N4"), Permutation::from_cycles(12, {{0, 1}}));
    FAIL();
  } catch (const SurfaceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAutomorphism);
  }
  try {
    orientation_character(fixtures::rp2_6(), Permutation::identity(6));
    FAIL();
  } catch (const SurfaceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotOrientable);
  }
}

TEST(OrientationCharacter, CyclicClassesHaveReversingGenerator) {
  for (const char* name : {"N1", "N2"}) {
    const Complex& k = fixtures::named(name);
    const auto orient = orientability(k).assignment;
    const AutGroup g = automorphism_group(k);
    bool found = false;
    for (const auto& x : g.elements) {
      if (x.order() != 12) continue;
      if (orientation_character(k, orient, x) == -1 && orientation_character(k, orient, x * x) == 1) found = true;
    }
    EXPECT_TRUE(found) << name;
  }
}

TEST(OrientationCharacter, DihedralClassPreservesOrientation) {
  const Complex& k = fixtures::named("N3");
  const auto orient = orientability(k).assignment;
  for (const auto& x : automorphism_group(k).elements) EXPECT_EQ(orientation_character(k, orient, x), 1);
}

TEST(OrientationCharacter, IsHomomorphism) {
  for (const auto& e : fixtures::catalog()) {
    const auto orient = orientability(e.complex).assignment;
    const AutGroup g = automorphism_group(e.complex);
    for (const auto& p : g.elements) {
      for (const auto& q : g.elements) {
        EXPECT_EQ(orientation_character(e.complex, orient, p * q),
                  orientation_character(e.complex, orient, p) * orientation_character(e.complex, orient, q));
      }
    }
  }
}

TEST(Transitivity, Catalog) {
  for (const auto& e : fixtures::catalog()) {
    const bool expected = e.name == "N1" || e.name == "N2" || e.name == "N3";
    EXPECT_EQ(is_vertex_transitive(e.complex), expected) << e.name;
    EXPECT_FALSE(is_flag_transitive(e.complex)) << e.name;
    if (expected) {
      EXPECT_TRUE(degree_regular_type(e.complex).has_value());
    }
  }
}

TEST(Transitivity, Icosahedron) {
  const Complex k = fixtures::icosahedron();
  const AutGroup g = automorphism_group(k);
  EXPECT_TRUE(is_flag_transitive(k, g));
  EXPECT_TRUE(is_vertex_transitive(k, g));
  EXPECT_EQ(static_cast<int>(flags_of(k).size()) % g.order(), 0);
}

TEST(Transitivity, FlagOrbitsPartitionFlags) {
  for (const auto& e : fixtures::catalog()) {
    const AutGroup g = automorphism_group(e.complex);
    std::size_t total = 0;
    for (const auto& orbit : flag_orbits(e.complex, g)) {
      total += orbit.size();
      EXPECT_EQ(g.order() % static_cast<int>(orbit.size()), 0);
    }
    EXPECT_EQ(total, 168u);
  }
}
