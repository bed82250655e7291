#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trisurf/catalog.hpp"
#include "trisurf/complex.hpp"
#include "trisurf/error.hpp"
#include "trisurf/isomorphism.hpp"
#include "trisurf/permutation.hpp"

namespace trisurf {

using Cycles = std::vector<std::vector<VertexId>>;

/// A fully listed subcase of the (12, 7) case analysis: vertex links in the
/// labels 0..9, u = 10, v = 11, the relabeling said to carry the complex
/// onto a named class, and that class's generators in the same labels.
struct ProofSubcase {
  std::string label;
  std::string target;
  std::vector<std::pair<VertexId, std::vector<VertexId>>> links;
  Cycles map;
  std::vector<Cycles> target_generators;
};

namespace detail {

constexpr VertexId U = 10;
constexpr VertexId V = 11;

using LinkList = std::vector<std::pair<VertexId, std::vector<VertexId>>>;

inline LinkList join(LinkList base, const LinkList& more) {
  base.insert(base.end(), more.begin(), more.end());
  return base;
}

}  // namespace detail

inline const std::vector<ProofSubcase>& proof_subcases() {
  using detail::U;
  using detail::V;
  using detail::join;
  static const std::vector<ProofSubcase> cases = [] {
    const detail::LinkList root{{0, {1, 2, 3, 4, 5, 6, 7}}};
    const auto case1 = join(root, {{1, {8, 2, 0, 7, 3, 6, 9}},
                                   {6, {7, 0, 5, 9, 1, 3, 2}},
                                   {3, {4, 0, 2, 6, 1, 7, U}},
                                   {7, {2, 6, 0, 1, 3, U, V}},
                                   {2, {8, 1, 0, 3, 6, 7, V}}});
    const auto case2 = join(root, {{1, {8, 2, 0, 7, 3, 9, 5}}, {3, {4, 0, 2, 9, 1, 7, U}}});
    const auto case3 = join(root, {{1, {8, 2, 0, 7, 3, 9, 6}},
                                   {3, {2, 0, 4, 7, 1, 9, U}},
                                   {7, {4, 3, 1, 0, 6, 9, V}}});

    const Cycles sigma{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
    const Cycles sigma2{{0, 2, 4, 6, 8, 10}, {1, 3, 5, 7, 9, 11}};
    const Cycles tau{{1, 4}, {2, 3}, {8, 9}, {6, 11}, {0, 5}, {7, 10}};
    const Cycles gamma{{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}};
    const Cycles alpha{{0, 4, 8}, {1, 5, 9}, {2, 6, 10}, {3, 7, 11}};
    const Cycles beta{{0, 2}, {4, 10}, {1, 11}, {3, 9}, {5, 7}, {6, 8}};
    const Cycles alpha1{{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 0}};
    const Cycles alpha2{{1, 3}, {2, 4}, {5, 7}, {6, 8}, {9, 11}, {10, 0}};

    return std::vector<ProofSubcase>{
        {"1.1", "N1",
         join(case1, {{4, {U, 3, 0, 5, V, 9, 8}}, {8, {2, 1, 9, 4, U, 5, V}}, {V, {2, 7, U, 9, 4, 5, 8}}}),
         {{1, 8, 7, 4}, {2, 6, U, 3}, {5, V}},
         {sigma}},
        {"1.2", "N3",
         join(case1, {{4, {U, 3, 0, 5, 8, V, 9}},
                      {8, {9, 1, 2, V, 4, 5, U}},
                      {9, {8, 1, 6, 5, V, 4, U}},
                      {5, {9, 6, 0, 4, 8, U, V}}}),
         {{0, 4, 1, 8, 7}, {2, U, V, 9, 5, 3}},
         {sigma2, tau}},
        {"2.1", "N4",
         join(case2, {{2, {9, 3, 0, 1, 8, 6, V}},
                      {6, {V, 2, 8, 7, 0, 5, U}},
                      {7, {6, 0, 1, 3, U, V, 8}},
                      {U, {5, 6, V, 7, 3, 4, 9}},
                      {5, {8, 1, 9, U, 6, 0, 4}},
                      {8, {4, 5, 1, 2, 6, 7, V}},
                      {4, {U, 9, V, 8, 5, 0, 3}}}),
         {{0, 9, 6, 2, 4, V, 8, U, 5}, {3, 7}},
         {gamma}},
        {"2.2", "N5",
         join(case2, {{2, {9, 3, 0, 1, 8, U, V}},
                      {9, {5, 1, 3, 2, V, 4, 6}},
                      {4, {V, 5, 0, 3, U, 6, 9}},
                      {5, {V, 4, 0, 6, 9, 1, 8}},
                      {U, {8, 6, 4, 3, 7, V, 2}},
                      {6, {8, U, 4, 9, 5, 0, 7}},
                      {7, {8, 6, 0, 1, 3, U, V}},
                      {8, {V, 7, 6, U, 2, 1, 5}},
                      {V, {7, 8, 5, 4, 9, 2, U}}}),
         {{0, 2}, {3, V, 8, 9, 4}, {7, U}},
         {alpha, beta}},
        {"3.1", "N6",
         join(case3, {{6, {5, 0, 7, 9, 1, 8, U}},
                      {9, {3, 1, 6, 7, V, 5, U}},
                      {5, {0, 4, 8, V, 9, U, 6}},
                      {8, {1, 2, 4, 5, V, U, 6}},
                      {4, {0, 3, 7, V, 2, 8, 5}},
                      {2, {0, 1, 8, 4, V, U, 3}}}),
         {{0, 9, 3, U}, {1, 5, V, 7, 6, 4, 2}},
         {alpha1, alpha2}},
        {"3.2", "N2",
         join(case3, {{6, {5, 0, 7, 9, 1, 8, V}},
                      {9, {1, 3, U, 8, V, 7, 6}},
                      {8, {1, 2, 5, U, 9, V, 6}},
                      {V, {4, 7, 9, 8, 6, 5, U}},
                      {U, {2, 3, 9, 8, 5, V, 4}},
                      {2, {0, 1, 8, 5, 4, U, 3}}}),
         {{0, 1, 6, 5, 9, U, 3, 7, V, 4, 8}},
         {sigma}},
    };
  }();
  return cases;
}

/// The faces {x, a_i, a_{i+1}} of every listed link lk(x) = C(a_1, ..., a_m).
inline std::vector<Triangle> faces_from_links(const ProofSubcase& sc) {
  std::set<Triangle> faces;
  for (const auto& [x, cycle] : sc.links) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      faces.emplace(x, cycle[i], cycle[(i + 1) % cycle.size()]);
    }
  }
  return {faces.begin(), faces.end()};
}

/// The subcase complex, when its listed links pin down all 28 faces.
inline Complex reconstruct_subcase(const ProofSubcase& sc) {
  auto faces = faces_from_links(sc);
  if (faces.size() != 28) {
    throw SurfaceError(ErrorKind::ReconstructionIncomplete,
                       "subcase " + sc.label + ": listed links give " +
                           std::to_string(faces.size()) + " of 28 faces");
  }
  return Complex(12, std::move(faces));
}

enum class ProofStatus { Verified, ReconstructionIncomplete, Mismatch };

inline std::string to_string(ProofStatus s) {
  switch (s) {
    case ProofStatus::Verified: return "verified";
    case ProofStatus::ReconstructionIncomplete: return "reconstruction-incomplete";
    case ProofStatus::Mismatch: return "mismatch";
  }
  return "?";
}

struct SubcaseResult {
  std::string label;
  std::string target;
  ProofStatus status = ProofStatus::Mismatch;
  int faces_found = 0;
  std::optional<Permutation> witness;  // subcase complex -> catalog entry
  /// Whether the quoted relabeling sends the subcase complex onto a complex
  /// having the quoted generators as automorphisms; absent if not reconstructed.
  std::optional<bool> quoted_map_consistent;
  std::string detail;
};

struct ProofReport {
  std::vector<SubcaseResult> results;

  bool ok() const {
    for (const auto& r : results) {
      if (r.status == ProofStatus::Mismatch) return false;
    }
    return true;
  }
};

inline SubcaseResult verify_subcase(const ProofSubcase& sc, const std::vector<CatalogEntry>& catalog) {
  SubcaseResult r;
  r.label = sc.label;
  r.target = sc.target;
  r.faces_found = static_cast<int>(faces_from_links(sc).size());
  Complex k;
  try {
    k = reconstruct_subcase(sc);
  } catch (const SurfaceError& e) {
    if (e.kind() != ErrorKind::ReconstructionIncomplete) throw;
    r.status = ProofStatus::ReconstructionIncomplete;
    r.detail = e.what();
    return r;
  }

  if (!is_combinatorial_2_manifold(k).is_manifold || degree_regular_type(k) != 7) {
    r.detail = "reconstructed complex is not a degree-7 combinatorial 2-manifold";
    return r;
  }
  for (const auto& [x, cycle] : sc.links) {
    if (static_cast<int>(cycle.size()) != k.degree(x)) {
      r.detail = "listed link of " + std::to_string(x) + " disagrees with the complex";
      return r;
    }
  }

  const Complex image = relabel(k, Permutation::from_cycles(12, sc.map));
  bool consistent = true;
  for (const auto& g : sc.target_generators) {
    consistent = consistent && is_automorphism(image, Permutation::from_cycles(12, g));
  }
  r.quoted_map_consistent = consistent;

  r.witness = are_isomorphic(k, find_entry(catalog, sc.target).complex);
  if (r.witness) {
    r.status = ProofStatus::Verified;
    r.detail = "isomorphic to " + sc.target;
  } else {
    r.detail = "not isomorphic to " + sc.target;
  }
  return r;
}

/// Reconstructs every listed subcase and checks it against its named class.
inline ProofReport verify_proof_maps(const std::vector<CatalogEntry>& catalog) {
  ProofReport report;
  for (const auto& sc : proof_subcases()) report.results.push_back(verify_subcase(sc, catalog));
  return report;
}

}  // namespace trisurf
