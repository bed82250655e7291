#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trisurf/trisurf.hpp"

#ifndef TRISURF_CATALOG_DIR
#define TRISURF_CATALOG_DIR "catalog"
#endif

namespace {

using nlohmann::json;
using namespace trisurf;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  std::vector<std::string> inputs;
  std::string out;
  std::string catalog_dir = TRISURF_CATALOG_DIR;
  std::string entry;
  int chi = -2;
  int max_vertices = 12;
  int jobs = 1;
  int parallel_width = 0;
  bool orientable = false;
  bool stats = false;
  bool no_prune = false;
  bool map_input = false;
};

bool json_mode(const Options& o) { return o.format == "json"; }

json faces_json(const Complex& k) {
  json out = json::array();
  for (const auto& f : k.faces()) out.push_back({f[0], f[1], f[2]});
  return out;
}

json map_faces_json(const PolyhedralMap& m) {
  json out = json::array();
  for (const auto& f : m.faces()) out.push_back(f);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

// ---------------------------------------------------------------------------

int run_check(const Options& o) {
  const Complex k = io::read_face_list(o.inputs.at(0));
  const auto manifold = is_combinatorial_2_manifold(k);
  const bool connected = is_connected(k);
  json j;
  j["f_vector"] = {k.f_vector().f0, k.f_vector().f1, k.f_vector().f2};
  j["chi"] = euler_characteristic(k);
  j["manifold"] = manifold.is_manifold;
  j["connected"] = connected;
  const auto d = degree_regular_type(k);
  j["degree_type"] = d ? json(*d) : json(nullptr);
  std::vector<std::string> words;
  if (!manifold.is_manifold) {
    j["offending_vertex"] = *manifold.offending_vertex;
    j["reason"] = manifold.reason;
    words.push_back("not a combinatorial 2-manifold (vertex " +
                    std::to_string(*manifold.offending_vertex) + ": " + manifold.reason + ")");
  } else {
    words.push_back("combinatorial 2-manifold");
    if (connected) {
      const auto orient = orientability(k);
      j["orientable"] = orient.orientable;
      words.push_back(orient.orientable ? "orientable" : "non-orientable");
      if (orient.orientable) j["genus"] = genus(k);
    } else {
      words.push_back("disconnected");
    }
  }
  words.push_back("χ=" + std::to_string(euler_characteristic(k)));
  if (d) words.push_back("degree-regular type " + std::to_string(*d));
  if (manifold.is_manifold && connected) {
    try {
      const std::string name = identify(k);
      j["class"] = name;
      words.push_back("class " + name);
    } catch (const SurfaceError&) {
    }
  }
  if (json_mode(o)) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << join(words, ", ") << '\n';
  }
  return manifold.is_manifold ? kOk : kNegative;
}

int run_invariants(const Options& o) {
  const Complex k = io::read_face_list(o.inputs.at(0));
  const Fingerprint fp = fingerprint(k);
  json j;
  j["G_n"] = json::array();
  for (std::size_t n = 0; n < fp.shapes.size(); ++n) {
    j["G_n"].push_back({{"n", n}, {"shape", fp.shapes[n].to_string()}});
  }
  if (json_mode(o)) {
    std::cout << j.dump(2) << '\n';
  } else {
    for (std::size_t n = 0; n < fp.shapes.size(); ++n) {
      std::cout << "G_" << n << ": " << fp.shapes[n].to_string() << '\n';
    }
  }
  return kOk;
}

/// First invariant in a fixed order that tells k1 and k2 apart.
std::optional<std::string> separating_invariant(const Complex& k1, const Complex& k2) {
  const auto f1 = k1.f_vector();
  const auto f2 = k2.f_vector();
  auto fstr = [](const FVector& f) {
    return "(" + std::to_string(f.f0) + "," + std::to_string(f.f1) + "," + std::to_string(f.f2) + ")";
  };
  if (!(f1 == f2)) return "f-vector: " + fstr(f1) + " vs " + fstr(f2);

  auto degrees = [](const Complex& k) {
    std::vector<int> out;
    for (VertexId v = 0; v < k.num_vertices(); ++v) out.push_back(k.degree(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (degrees(k1) != degrees(k2)) return std::string("degree sequence differs");

  auto well_formed = [](const Complex& k) {
    return is_combinatorial_2_manifold(k).is_manifold && is_connected(k);
  };
  if (well_formed(k1) && well_formed(k2)) {
    const bool o1 = orientability(k1).orientable;
    const bool o2 = orientability(k2).orientable;
    if (o1 != o2) {
      return std::string("orientability: ") + (o1 ? "orientable" : "non-orientable") + " vs " +
             (o2 ? "orientable" : "non-orientable");
    }
    const GroupId a1 = identify_group(automorphism_group(k1));
    const GroupId a2 = identify_group(automorphism_group(k2));
    if (!(a1 == a2)) return "Aut structure: " + a1.to_string() + " vs " + a2.to_string();
  }
  const Fingerprint fp1 = fingerprint(k1);
  const Fingerprint fp2 = fingerprint(k2);
  for (std::size_t n = 0; n < fp1.shapes.size(); ++n) {
    if (!(fp1.shapes[n] == fp2.shapes[n])) {
      return "G_" + std::to_string(n) + " shape: " + fp1.shapes[n].to_string() + " vs " +
             fp2.shapes[n].to_string();
    }
  }
  return std::nullopt;
}

int run_iso(const Options& o) {
  const Complex k1 = io::read_face_list(o.inputs.at(0));
  const Complex k2 = io::read_face_list(o.inputs.at(1));
  const auto witness = are_isomorphic(k1, k2);
  json j;
  j["isomorphic"] = witness.has_value();
  if (witness) {
    j["witness"] = witness->to_cycle_string();
    std::vector<int> image;
    for (VertexId v = 0; v < witness->size(); ++v) image.push_back((*witness)(v));
    j["image"] = image;
  } else {
    j["separating_invariant"] =
        separating_invariant(k1, k2).value_or("none of the invariants differ; search found no map");
  }
  if (json_mode(o)) {
    std::cout << j.dump(2) << '\n';
  } else if (witness) {
    std::cout << "isomorphic, witness " << witness->to_cycle_string() << '\n';
  } else {
    std::cout << "non-isomorphic: " << j["separating_invariant"].get<std::string>() << '\n';
  }
  return witness ? kOk : kNegative;
}

int run_aut(const Options& o) {
  const Complex k = io::read_face_list(o.inputs.at(0));
  const AutGroup group = automorphism_group(k);
  const GroupId id = identify_group(group);
  json j;
  j["order"] = group.order();
  j["structure"] = id.to_string();
  j["generators"] = cycle_strings(group.generators);
  j["vertex_transitive"] = is_vertex_transitive(k, group);
  j["flag_transitive"] = is_flag_transitive(k, group);
  const auto orient = orientability(k);
  if (orient.orientable) {
    std::vector<int> chars;
    for (const auto& g : group.generators) chars.push_back(orientation_character(k, orient.assignment, g));
    j["generator_characters"] = chars;
  }
  if (json_mode(o)) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "Aut: " << id.to_string() << ", order " << group.order() << '\n';
    for (const auto& g : group.generators) std::cout << "  " << g.to_cycle_string() << '\n';
    std::cout << "vertex-transitive: " << (j["vertex_transitive"].get<bool>() ? "yes" : "no") << '\n';
    std::cout << "flag-transitive: " << (j["flag_transitive"].get<bool>() ? "yes" : "no") << '\n';
  }
  return kOk;
}

PolyhedralMap read_map_input(const Options& o) {
  if (o.map_input) {
    std::ifstream in(o.inputs.at(0));
    if (!in) throw SurfaceError(ErrorKind::Parse, "cannot open " + o.inputs.at(0));
    return io::parse_map(in);
  }
  return from_triangulation(io::read_face_list(o.inputs.at(0)));
}

int run_dual(const Options& o) {
  const PolyhedralMap d = dual(read_map_input(o));
  const auto type = equivelar_type(d);
  const int chi = map_euler_characteristic(d);
  if (!o.out.empty()) std::ofstream(o.out) << io::write_map(d);
  if (json_mode(o)) {
    json j;
    j["vertices"] = d.num_vertices();
    j["edges"] = d.num_edges();
    j["faces"] = map_faces_json(d);
    j["chi"] = chi;
    j["type"] = type ? json{type->p, type->q} : json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else if (o.out.empty()) {
    std::cout << io::write_map(d);
  } else {
    std::cout << d.num_vertices() << " vertices, " << d.num_edges() << " edges, " << d.num_faces()
              << " faces, χ=" << chi;
    if (type) std::cout << ", {" << type->p << "," << type->q << "}-equivelar";
    std::cout << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct NamedClass {
  std::string name;
  const ClassRecord* record;
};

std::vector<NamedClass> name_classes(const ClassificationResult& r, bool orientable) {
  std::vector<NamedClass> out;
  std::vector<std::string> names;
  if (orientable && r.n == 12 && r.d == 7) {
    try {
      for (const auto& e : build_catalog(r)) names.push_back(e.name);
    } catch (const SurfaceError&) {
      names.clear();
    }
  }
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    std::string name = "n" + std::to_string(r.n) + "_d" + std::to_string(r.d) + "_" + std::to_string(i + 1);
    if (!names.empty()) {
      try {
        name = identify(r.classes[i].complex, r.classes[i].certificate);
      } catch (const SurfaceError&) {
      }
    }
    out.push_back({name, &r.classes[i]});
  }
  std::sort(out.begin(), out.end(), [](const NamedClass& a, const NamedClass& b) { return a.name < b.name; });
  return out;
}

json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"leaves", s.leaves},
          {"dead_ends", s.dead_ends},
          {"star_bound_prunes", s.star_bound_prunes},
          {"non_orientable_leaves", s.non_orientable},
          {"duplicate_leaves", s.duplicates}};
}

int run_classify(const Options& o) {
  SearchConfig config;
  config.orientable_only = o.orientable;
  config.prune_star_bound = !o.no_prune;
  config.jobs = o.jobs;
  config.parallel_width = o.parallel_width > 0 ? o.parallel_width : (o.jobs > 1 ? 4 : 0);
  const auto params = admissible_parameters(o.chi, o.max_vertices);
  const auto results = classify_chi(o.chi, config, o.max_vertices);

  json j;
  j["chi"] = o.chi;
  j["orientable_only"] = o.orientable;
  j["parameters"] = json::array();
  for (const auto& p : params) j["parameters"].push_back({p.n, p.d});
  j["runs"] = json::array();
  json certificates = json::array();
  bool exhaustive = true;
  std::size_t total = 0;
  std::ostringstream text;
  for (const auto& r : results) {
    exhaustive = exhaustive && r.exhaustive;
    total += r.classes.size();
    json run{{"n", r.n}, {"d", r.d}, {"exhaustive", r.exhaustive}, {"classes", json::array()}};
    if (o.stats) run["stats"] = stats_json(r.stats);
    text << "(n, d) = (" << r.n << ", " << r.d << "): " << r.classes.size() << " classes\n";
    for (const auto& [name, rec] : name_classes(r, o.orientable)) {
      json c = certificate_json(name, rec->certificate);
      certificates.push_back(c);
      c["orientable"] = rec->certificate.orientable;
      c["faces"] = faces_json(rec->complex);
      run["classes"].push_back(c);
      text << "  " << name << ": Aut " << rec->certificate.aut_structure.to_string() << ", G_2 "
           << rec->certificate.shape(2).to_string()
           << (rec->certificate.orientable ? ", orientable" : ", non-orientable")
           << (rec->certificate.vertex_transitive ? ", vertex-transitive" : "") << '\n';
      if (!o.out.empty()) {
        std::filesystem::create_directories(o.out);
        std::ofstream(std::filesystem::path(o.out) / (name + ".tri")) << io::write_face_list(rec->complex, name);
      }
    }
    if (o.stats) {
      const auto& s = r.stats;
      text << "  nodes " << s.nodes << ", leaves " << s.leaves << ", dead ends " << s.dead_ends
           << ", star-bound prunes " << s.star_bound_prunes << ", non-orientable leaves "
           << s.non_orientable << ", duplicate leaves " << s.duplicates << '\n';
    }
    j["runs"].push_back(run);
  }
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    std::ofstream(std::filesystem::path(o.out) / "certificates.json") << certificates.dump(2) << '\n';
  }
  j["total_classes"] = total;
  j["exhaustive"] = exhaustive;
  if (json_mode(o)) {
    std::cout << j.dump(2) << '\n';
  } else {
    if (params.empty()) std::cout << "no admissible (n, d) for χ=" << o.chi << '\n';
    std::cout << text.str() << total << " classes\n";
  }
  return exhaustive ? kOk : kNegative;
}

int run_catalog(const Options& o) {
  std::vector<CatalogEntry> entries;
  try {
    entries = load_catalog(o.catalog_dir);
  } catch (const SurfaceError& e) {
    std::cerr << e.what() << '\n';
    return kNegative;
  }
  if (!o.entry.empty()) {
    const auto& e = find_entry(entries, o.entry);
    std::cout << export_entry(e, json_mode(o) ? ExportFormat::Json : ExportFormat::Text);
    return kOk;
  }
  if (json_mode(o)) {
    std::cout << certificates_json(entries).dump(2) << '\n';
    return kOk;
  }
  for (const auto& e : entries) {
    const auto key = e.key();
    std::cout << e.name << ": G_2 " << key.g2_shape << ", G_5 " << key.g5_shape << ", Aut "
              << key.aut.to_string() << (e.certificate.vertex_transitive ? ", vertex-transitive" : "")
              << '\n';
  }
  return kOk;
}

int run_verify_proof(const Options& o) {
  const auto entries = load_catalog(o.catalog_dir);
  const ProofReport report = verify_proof_maps(entries);
  if (json_mode(o)) {
    json j = json::array();
    for (const auto& r : report.results) {
      json x{{"subcase", r.label},
             {"target", r.target},
             {"status", to_string(r.status)},
             {"faces_found", r.faces_found},
             {"detail", r.detail}};
      if (r.witness) x["witness"] = r.witness->to_cycle_string();
      if (r.quoted_map_consistent) x["quoted_map_consistent"] = *r.quoted_map_consistent;
      j.push_back(x);
    }
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& r : report.results) {
      std::cout << "subcase " << r.label << " -> " << r.target << ": " << to_string(r.status);
      if (r.status == ProofStatus::ReconstructionIncomplete) {
        std::cout << " (" << r.faces_found << " of 28 faces)";
      }
      if (r.quoted_map_consistent && !*r.quoted_map_consistent) {
        std::cout << " (quoted map does not carry the generators)";
      }
      std::cout << '\n';
    }
  }
  return report.ok() ? kOk : kNegative;
}

bool is_parse_error(ErrorKind k) {
  return k == ErrorKind::Parse || k == ErrorKind::DegenerateFace || k == ErrorKind::EmptyInput ||
         k == ErrorKind::InvalidMap;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangulated surfaces: invariants, isomorphism, duals and classification"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* check = app.add_subcommand("check", "Validate a face list as a combinatorial 2-manifold");
  check->add_option("file", o.inputs, "Face-list file")->required()->expected(1);
  add_format(check);

  auto* inv = app.add_subcommand("invariants", "Common-neighbour graph shapes G_n(EG(K))");
  inv->add_option("file", o.inputs, "Face-list file")->required()->expected(1);
  add_format(inv);

  auto* iso = app.add_subcommand("iso", "Test two complexes for isomorphism");
  iso->add_option("files", o.inputs, "Two face-list files")->required()->expected(2);
  add_format(iso);

  auto* aut = app.add_subcommand("aut", "Automorphism group");
  aut->add_option("file", o.inputs, "Face-list file")->required()->expected(1);
  add_format(aut);

  auto* dual_cmd = app.add_subcommand("dual", "Dual polyhedral map");
  dual_cmd->add_option("file", o.inputs, "Face-list file (or map file with --map)")->required()->expected(1);
  dual_cmd->add_flag("--map", o.map_input, "Input is a polyhedral map, one cyclic face per line");
  dual_cmd->add_option("--out", o.out, "Write the dual map to this file");
  add_format(dual_cmd);

  auto* classify = app.add_subcommand("classify", "Enumerate degree-regular manifolds of given χ");
  classify->add_option("--chi", o.chi, "Euler characteristic")->required();
  classify->add_flag("--orientable", o.orientable, "Keep orientable classes only");
  classify->add_flag("--stats", o.stats, "Report search counters");
  classify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  classify->add_option("--width", o.parallel_width, "Search depth at which work is split")
      ->check(CLI::NonNegativeNumber);
  classify->add_flag("--no-prune", o.no_prune, "Disable the star-union face bound");
  classify->add_option("--max-vertices", o.max_vertices, "Vertex cap for χ=0");
  classify->add_option("--out", o.out, "Directory for .tri files and certificates.json");
  add_format(classify);

  auto* catalog = app.add_subcommand("catalog", "Load, validate and export the shipped catalog");
  catalog->add_option("--catalog", o.catalog_dir, "Catalog directory");
  catalog->add_option("--entry", o.entry, "Export one entry (N1..N6)");
  add_format(catalog);

  auto* verify = app.add_subcommand("verify-proof", "Check the listed subcase complexes against the catalog");
  verify->add_option("--catalog", o.catalog_dir, "Catalog directory");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return run_check(o);
    if (*inv) return run_invariants(o);
    if (*iso) return run_iso(o);
    if (*aut) return run_aut(o);
    if (*dual_cmd) return run_dual(o);
    if (*classify) return run_classify(o);
    if (*catalog) return run_catalog(o);
    if (*verify) return run_verify_proof(o);
  } catch (const SurfaceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_parse_error(e.kind()) ? kUsage : kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNegative;
  }
  return kUsage;
}
