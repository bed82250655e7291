#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "trisurf/trisurf.hpp"

using namespace trisurf;
using fixtures::Faces;

namespace {

std::vector<VertexId> iota_vec(int from, int to) {
  std::vector<VertexId> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST(Permutation, ComposeInverseOrder) {
  const auto p = Permutation::from_cycles(5, {{0, 1, 2}});
  const auto q = Permutation::from_cycles(5, {{2, 3}});
  EXPECT_EQ((p * q)(2), p(q(2)));
  EXPECT_EQ((p * q)(3), 0);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(p.order(), 3);
  EXPECT_EQ((p * q).order(), 4);
  EXPECT_EQ(p.pow(3), Permutation::identity(5));
  EXPECT_EQ(p.to_cycle_string(), "(0,1,2)");
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation(std::vector<VertexId>{0, 0, 1}), SurfaceError);
  EXPECT_THROW(Permutation(std::vector<VertexId>{0, 3}), SurfaceError);
}

TEST(Triangle, SortsAndRejectsRepeats) {
  const Triangle t(5, 1, 3);
  EXPECT_EQ(t[0], 1);
  EXPECT_EQ(t[2], 5);
  EXPECT_EQ(t.opposite(5, 1), 3);
  try {
    Triangle(1, 1, 2);
    FAIL() << "expected DegenerateFace";
  } catch (const SurfaceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateFace);
  }
}

TEST(BuildComplex, TetrahedronFVector) {
  const Complex k = fixtures::tetrahedron();
  EXPECT_EQ(k.f_vector(), (FVector{4, 6, 4}));
}

TEST(BuildComplex, NormalizesLabelsAndCollapsesDuplicates) {
  const Complex k = Complex::from_faces(Faces{{10, 20, 30}, {30, 20, 10}, {10, 20, 40}, {10, 30, 40}, {20, 30, 40}});
  EXPECT_EQ(k.num_vertices(), 4);
  EXPECT_EQ(k, fixtures::tetrahedron());
}

TEST(BuildComplex, Errors) {
  try {
    Complex::from_faces(Faces{{0, 1, 2}, {1, 1, 2}});
    FAIL();
  } catch (const SurfaceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateFace);
  }
  try {
    Complex::from_faces(Faces{});
    FAIL();
  } catch (const SurfaceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyInput);
  }
}

TEST(BuildComplex, CatalogMemberFVector) {
  for (const auto& e : fixtures::catalog()) EXPECT_EQ(e.complex.f_vector(), (FVector{12, 42, 28})) << e.name;
}

TEST(FaceListIo, ParsesUAndVAndComments) {
  const Complex k = io::parse_face_list("# header\n0 1 u\n0 u v # trailing\n\n0 1 v\n1 u v\n");
  EXPECT_EQ(k.num_vertices(), 4);
  EXPECT_EQ(k.f_vector(), (FVector{4, 6, 4}));
}

TEST(FaceListIo, RejectsBadLines) {
  EXPECT_THROW(io::parse_face_list("0 1\n"), SurfaceError);
  EXPECT_THROW(io::parse_face_list("0 1 2 3\n"), SurfaceError);
  EXPECT_THROW(io::parse_face_list("0 1 x\n"), SurfaceError);
  EXPECT_THROW(io::parse_face_list("0 1 -2\n"), SurfaceError);
}

TEST(FaceListIo, RoundTripIsByteIdentical) {
  for (const auto& e : fixtures::catalog()) {
    const std::string text = io::write_face_list(e.complex, e.name);
    EXPECT_EQ(io::write_face_list(io::parse_face_list(text), e.name), text);
  }
}

TEST(Links, TetrahedronLinkIsTriangle) {
  const auto lc = link_cycle(fixtures::tetrahedron(), 0);
  EXPECT_EQ(lc.cycle, (std::vector<VertexId>{1, 2, 3}));
  const auto g = link_of(fixtures::tetrahedron(), 0);
  EXPECT_EQ(g.labels.size(), 3u);
  EXPECT_EQ(g.edges.size(), 3u);
}

TEST(Links, StartsAtSmallestNeighbourTowardsSmaller) {
  const auto lc = link_cycle(fixtures::torus7(), 0);
  ASSERT_EQ(lc.cycle.size(), 6u);
  EXPECT_EQ(lc.cycle.front(), 1);
  EXPECT_LT(lc.cycle[1], lc.cycle.back());
}

TEST(Links, BoundaryEdgeIsNotACycle) {
  const Complex k = Complex::from_faces(Faces{{0, 1, 2}, {0, 1, 3}});
  try {
    link_cycle(k, 0);
    FAIL();
  } catch (const SurfaceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACycle);
  }
  EXPECT_THROW(link_cycle(k, 9), SurfaceError);
}

TEST(Links, SeedStateLinkOfZero) {
  auto state = PartialComplex::seeded(12, 7);
  const Complex star = Complex::from_faces([] {
    Faces f;
    for (int i = 1; i <= 7; ++i) f.push_back({0, i, i % 7 + 1});
    return f;
  }());
  EXPECT_EQ(link_cycle(star, 0).cycle, iota_vec(1, 7));
  EXPECT_EQ(state.faces_at(0), 7);
}

TEST(Manifold, Verdicts) {
  EXPECT_TRUE(is_combinatorial_2_manifold(fixtures::tetrahedron()).is_manifold);
  EXPECT_TRUE(is_combinatorial_2_manifold(fixtures::octahedron()).is_manifold);
  EXPECT_TRUE(is_combinatorial_2_manifold(fixtures::icosahedron()).is_manifold);
  EXPECT_TRUE(is_combinatorial_2_manifold(fixtures::rp2_6()).is_manifold);
  const auto glued = is_combinatorial_2_manifold(fixtures::glued_tetrahedra());
  EXPECT_FALSE(glued.is_manifold);
  EXPECT_EQ(glued.offending_vertex, 0);
  for (const auto& e : fixtures::catalog()) EXPECT_TRUE(is_combinatorial_2_manifold(e.complex).is_manifold);
}

TEST(EulerCharacteristic, Examples) {
  EXPECT_EQ(euler_characteristic(fixtures::tetrahedron()), 2);
  EXPECT_EQ(euler_characteristic(fixtures::octahedron()), 2);
  EXPECT_EQ(euler_characteristic(fixtures::rp2_6()), 1);
  EXPECT_EQ(euler_characteristic(fixtures::torus7()), 0);
  EXPECT_EQ(euler_characteristic(fixtures::named("N3")), -2);
}

TEST(DegreeRegularType, Examples) {
  EXPECT_EQ(degree_regular_type(fixtures::octahedron()), 4);
  EXPECT_EQ(degree_regular_type(fixtures::icosahedron()), 5);
  EXPECT_EQ(degree_regular_type(fixtures::stellar_tetrahedron()), std::nullopt);
  for (const auto& e : fixtures::catalog()) EXPECT_EQ(degree_regular_type(e.complex), 7);
}

TEST(Orientability, Examples) {
  EXPECT_TRUE(orientability(fixtures::tetrahedron()).orientable);
  EXPECT_TRUE(orientability(fixtures::torus7()).orientable);
  for (const auto& e : fixtures::catalog()) EXPECT_TRUE(orientability(e.complex).orientable) << e.name;
}

TEST(Orientability, ProjectivePlaneHasObstruction) {
  const Complex rp2 = fixtures::rp2_6();
  EXPECT_EQ(rp2.f_vector(), (FVector{6, 15, 10}));
  const auto r = orientability(rp2);
  EXPECT_FALSE(r.orientable);
  EXPECT_TRUE(rp2.has_edge(r.conflict_edge.first, r.conflict_edge.second));
  ASSERT_GE(r.obstruction.size(), 2u);
  for (const auto& f : r.obstruction) EXPECT_TRUE(rp2.has_face(f));
}

TEST(Orientability, RejectsNonManifoldAndDisconnected) {
  try {
    orientability(fixtures::glued_tetrahedra());
    FAIL();
  } catch (const SurfaceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotManifold);
  }
  Faces two;
  const Complex tet = fixtures::tetrahedron();
  for (const auto& f : tet.faces()) {
    two.push_back(f.vertices());
    two.push_back({f[0] + 4, f[1] + 4, f[2] + 4});
  }
  const Complex k = Complex::from_faces(two);
  EXPECT_FALSE(is_connected(k));
  EXPECT_EQ(euler_characteristic(k), 4);
  try {
    orientability(k);
    FAIL();
  } catch (const SurfaceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotConnected);
  }
  EXPECT_THROW(genus(k), SurfaceError);
}

TEST(Orientability, AssignmentIsCoherentAndStartsSorted) {
  for (const Complex& k : {fixtures::tetrahedron(), fixtures::icosahedron(), fixtures::torus7(), fixtures::named("N5")}) {
    const auto r = orientability(k);
    ASSERT_TRUE(r.orientable);
    EXPECT_TRUE(is_coherent(k, r.assignment));
    EXPECT_EQ(r.assignment.oriented[0], k.faces()[0].vertices());
    EXPECT_EQ(r.assignment.sign(0), 1);
  }
}

TEST(Orientability, InvariantUnderRelabelingAndFaceOrder) {
  std::mt19937 rng(7);
  for (const Complex& k : {fixtures::rp2_6(), fixtures::torus7(), fixtures::named("N2")}) {
    const bool base = orientability(k).orientable;
    for (int t = 0; t < 10; ++t) {
      EXPECT_EQ(orientability(relabel(k, fixtures::random_permutation(k.num_vertices(), rng))).orientable, base);
      Faces shuffled;
      for (const auto& f : k.faces()) shuffled.push_back({f[2], f[0], f[1]});
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      EXPECT_EQ(orientability(Complex::from_faces(shuffled)).orientable, base);
    }
  }
}

TEST(Genus, Examples) {
  EXPECT_EQ(genus(fixtures::tetrahedron()), 0);
  EXPECT_EQ(genus(fixtures::torus7()), 1);
  for (const auto& e : fixtures::catalog()) EXPECT_EQ(genus(e.complex), 2);
  try {
    genus(fixtures::rp2_6());
    FAIL();
  } catch (const SurfaceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotOrientable);
  }
}

TEST(StarUnion, BoundValuesOnCatalog) {
  for (const auto& e : fixtures::catalog()) {
    const Complex& k = e.complex;
    for (VertexId x = 0; x < 12; ++x) {
      EXPECT_EQ(star_union_face_count(k, {x}), k.degree(x));
      for (VertexId y = x + 1; y < 12; ++y) {
        EXPECT_EQ(star_union_face_count(k, {x, y}), k.has_edge(x, y) ? 12 : 14) << e.name;
      }
    }
    for (const auto& f : k.faces()) EXPECT_EQ(star_union_face_count(k, {f[0], f[1], f[2]}), 16);
  }
}

TEST(StarUnion, Errors) {
  const Complex k = fixtures::tetrahedron();
  try {
    star_union_face_count(k, {0, 7});
    FAIL();
  } catch (const SurfaceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownVertex);
  }
  EXPECT_THROW(star_union_face_count(k, std::span<const VertexId>{}), SurfaceError);
}

TEST(Parameters, DegreeRegular) {
  EXPECT_EQ(admissible_parameters(-2), (std::vector<SurfaceParameters>{{12, 7}}));
  EXPECT_TRUE(admissible_parameters(-1).empty());
  EXPECT_EQ(admissible_parameters(2), (std::vector<SurfaceParameters>{{4, 3}, {6, 4}, {12, 5}}));
  EXPECT_EQ(admissible_parameters(1), (std::vector<SurfaceParameters>{{6, 5}}));
  EXPECT_EQ(admissible_parameters(0, 9), (std::vector<SurfaceParameters>{{7, 6}, {8, 6}, {9, 6}}));
  for (int chi = -12; chi <= 2; ++chi) {
    for (const auto& p : admissible_parameters(chi)) {
      EXPECT_EQ(p.n * (6 - p.d), 6 * chi);
      EXPECT_TRUE(feasible_degree_regular(p.n, p.d));
    }
  }
}

TEST(Parameters, Equivelar) {
  EXPECT_EQ(admissible_equivelar_parameters(-2), (std::vector<EquivelarParameters>{{12, 3, 7}, {28, 7, 3}}));
  const auto sphere = admissible_equivelar_parameters(2);
  for (EquivelarParameters p : {EquivelarParameters{4, 3, 3}, {6, 3, 4}, {8, 4, 3}, {12, 3, 5}, {20, 5, 3}}) {
    EXPECT_NE(std::find(sphere.begin(), sphere.end(), p), sphere.end());
  }
}

TEST(Properties, ManifoldEdgeAndDegreeIdentities) {
  std::mt19937 rng(11);
  std::vector<Complex> ks{fixtures::tetrahedron(), fixtures::octahedron(), fixtures::icosahedron(),
                          fixtures::rp2_6(), fixtures::torus7()};
  for (const auto& e : fixtures::catalog()) ks.push_back(e.complex);
  for (int i = 0; i < 10; ++i) ks.push_back(fixtures::random_flips(fixtures::icosahedron(), 30, rng));
  for (const auto& k : ks) {
    ASSERT_TRUE(is_combinatorial_2_manifold(k).is_manifold);
    for (auto [a, b] : k.edges()) EXPECT_EQ(k.faces_on_edge(a, b).size(), 2u);
    int degree_sum = 0;
    for (VertexId v = 0; v < k.num_vertices(); ++v) degree_sum += k.degree(v);
    const auto f = k.f_vector();
    EXPECT_EQ(degree_sum, 2 * f.f1);
    EXPECT_EQ(3 * f.f2, 2 * f.f1);
    if (auto d = degree_regular_type(k)) {
      EXPECT_EQ(f.f0 * *d, 2 * f.f1);
      EXPECT_EQ(6 * euler_characteristic(k), f.f0 * (6 - *d));
    }
  }
}

TEST(PermutationIo, CycleStringRoundTrip) {
  std::mt19937 rng(61);
  for (int t = 0; t < 20; ++t) {
    const Permutation p = fixtures::random_permutation(12, rng);
    EXPECT_EQ(io::parse_permutation(12, p.to_cycle_string()), p);
  }
  EXPECT_TRUE(io::parse_permutation(5, "()").is_identity());
  EXPECT_EQ(io::parse_permutation(12, "(0, u)(1,v)")(10), 0);
  EXPECT_THROW(io::parse_permutation(5, "(0,1"), SurfaceError);
  EXPECT_THROW(io::parse_permutation(5, "(0,1)(1,2)"), SurfaceError);
  EXPECT_THROW(io::parse_permutation(5, "0,1"), SurfaceError);
}
