#pragma once

#include <string>
#include <vector>

#include "trisurf/complex.hpp"
#include "trisurf/graph.hpp"
#include "trisurf/isomorphism.hpp"

namespace trisurf {

/// Label-free summary of a connected combinatorial 2-manifold.
struct Certificate {
  FVector f_vector;
  int chi = 0;
  bool orientable = false;
  std::optional<int> degree_type;
  Fingerprint fingerprint;
  int aut_order = 1;
  GroupId aut_structure;
  std::vector<Permutation> aut_generators;
  bool vertex_transitive = false;
  bool flag_transitive = false;

  const GraphShape& shape(int k) const { return fingerprint.shapes.at(k); }
};

inline Certificate certify(const Complex& k) {
  Certificate c;
  c.f_vector = k.f_vector();
  c.chi = euler_characteristic(k);
  c.orientable = orientability(k).orientable;
  c.degree_type = degree_regular_type(k);
  c.fingerprint = fingerprint(k);
  const AutGroup group = automorphism_group(k);
  c.aut_order = group.order();
  c.aut_structure = identify_group(group);
  c.aut_generators = group.generators;
  c.vertex_transitive = is_vertex_transitive(k, group);
  c.flag_transitive = is_flag_transitive(k, group);
  return c;
}

}  // namespace trisurf
