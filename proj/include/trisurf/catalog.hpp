#pragma once

#include <array>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trisurf/certificate.hpp"
#include "trisurf/complex.hpp"
#include "trisurf/enumeration.hpp"
#include "trisurf/error.hpp"
#include "trisurf/io.hpp"
#include "trisurf/isomorphism.hpp"

namespace trisurf {

/// (G_2 shape, G_5 shape, Aut structure).
struct IdentificationKey {
  std::string g2_shape;
  std::string g5_shape;
  GroupId aut;

  friend bool operator==(const IdentificationKey&, const IdentificationKey&) = default;
};

struct CatalogEntry {
  std::string name;
  Complex complex;
  Certificate certificate;

  IdentificationKey key() const {
    return {certificate.shape(2).to_string(), certificate.shape(5).to_string(),
            certificate.aut_structure};
  }
};

namespace detail {

struct ReferenceKey {
  const char* name;
  const char* g2_shape;
  const char* g5_shape;  // nullptr: recorded, not matched
  GroupId aut;
};

inline const std::array<ReferenceKey, 6>& reference_keys() {
  using K = GroupId::Kind;
  static const std::array<ReferenceKey, 6> keys{{
      {"N1", "C12", "2×C6", {K::Cyclic, 12}},
      {"N2", "12×I", nullptr, {K::Cyclic, 12}},
      {"N3", "C12", "2×C6", {K::Dihedral, 6}},
      {"N4", "P3+9×I", nullptr, {K::Cyclic, 2}},
      {"N5", "3×P2+6×I", "3×C4", {K::Dihedral, 3}},
      {"N6", "4×P2+4×I", nullptr, {K::KleinFour, 4}},
  }};
  return keys;
}

inline std::optional<std::string> match_key(const IdentificationKey& key) {
  for (const auto& ref : reference_keys()) {
    if (key.g2_shape != ref.g2_shape || !(key.aut == ref.aut)) continue;
    if (ref.g5_shape && key.g5_shape != ref.g5_shape) continue;
    return std::string(ref.name);
  }
  return std::nullopt;
}

inline bool is_double_torus_candidate(const Complex& k) {
  return k.num_vertices() == 12 && degree_regular_type(k) == 7 &&
         is_combinatorial_2_manifold(k).is_manifold && is_connected(k) && orientability(k).orientable;
}

}  // namespace detail

/// Name of the catalog class K belongs to, matched on its identification key.
inline std::string identify(const Complex& k, const Certificate& cert) {
  if (!detail::is_double_torus_candidate(k)) {
    throw SurfaceError(ErrorKind::NoMatch,
                       "not a 12-vertex degree-7 orientable combinatorial 2-manifold");
  }
  const IdentificationKey key{cert.shape(2).to_string(), cert.shape(5).to_string(),
                              cert.aut_structure};
  if (auto name = detail::match_key(key)) return *name;
  throw SurfaceError(ErrorKind::NoMatch, "no entry with G_2 " + key.g2_shape + ", G_5 " +
                                             key.g5_shape + ", Aut " + key.aut.to_string());
}

inline std::string identify(const Complex& k) {
  if (!detail::is_double_torus_candidate(k)) return identify(k, Certificate{});
  return identify(k, certify(k));
}

/// Names the classes of a (12, 7) orientable classification.
inline std::vector<CatalogEntry> build_catalog(const ClassificationResult& result) {
  std::vector<CatalogEntry> entries;
  for (const auto& rec : result.classes) {
    std::string name;
    try {
      name = identify(rec.complex, rec.certificate);
    } catch (const SurfaceError& e) {
      throw SurfaceError(ErrorKind::CorruptCatalog, e.what());
    }
    for (const auto& e : entries) {
      if (e.name == name) throw SurfaceError(ErrorKind::CorruptCatalog, "two classes named " + name);
    }
    entries.push_back({name, rec.complex, rec.certificate});
  }
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  return entries;
}

inline std::vector<CatalogEntry> generate_catalog(SearchConfig config = {}) {
  config.orientable_only = true;
  return build_catalog(enumerate_degree_regular(12, 7, config));
}

// ---------------------------------------------------------------------------
// Serialization.

inline std::vector<std::string> cycle_strings(const std::vector<Permutation>& perms) {
  std::vector<std::string> out;
  for (const auto& p : perms) out.push_back(p.to_cycle_string());
  return out;
}

inline nlohmann::json certificate_json(const std::string& name, const Certificate& cert) {
  nlohmann::json j;
  j["name"] = name;
  j["f_vector"] = {cert.f_vector.f0, cert.f_vector.f1, cert.f_vector.f2};
  j["chi"] = cert.chi;
  j["aut"] = {{"order", cert.aut_order},
              {"structure", cert.aut_structure.to_string()},
              {"generators", cycle_strings(cert.aut_generators)}};
  j["g2_shape"] = cert.shape(2).to_string();
  j["g5_shape"] = cert.shape(5).to_string();
  j["vertex_transitive"] = cert.vertex_transitive;
  return j;
}

enum class ExportFormat { Text, Json };

inline std::string export_entry(const CatalogEntry& entry, ExportFormat format) {
  if (format == ExportFormat::Text) return io::write_face_list(entry.complex, entry.name);
  nlohmann::json j = certificate_json(entry.name, entry.certificate);
  j["orientable"] = entry.certificate.orientable;
  if (entry.certificate.degree_type) j["degree_type"] = *entry.certificate.degree_type;
  auto& faces = j["faces"] = nlohmann::json::array();
  for (const auto& f : entry.complex.faces()) faces.push_back({f[0], f[1], f[2]});
  return j.dump(2) + "\n";
}

inline nlohmann::json certificates_json(const std::vector<CatalogEntry>& entries) {
  nlohmann::json all = nlohmann::json::array();
  for (const auto& e : entries) all.push_back(certificate_json(e.name, e.certificate));
  return all;
}

inline void write_catalog(const std::filesystem::path& dir, const std::vector<CatalogEntry>& entries) {
  std::filesystem::create_directories(dir);
  for (const auto& e : entries) {
    std::ofstream(dir / (e.name + ".tri")) << export_entry(e, ExportFormat::Text);
  }
  std::ofstream(dir / "certificates.json") << certificates_json(entries).dump(2) << '\n';
}

/// Reads N1..N6 from dir, revalidates each and checks it against
/// certificates.json. Any failure is CorruptCatalog.
inline std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir) {
  auto corrupt = [](const std::string& what) { return SurfaceError(ErrorKind::CorruptCatalog, what); };
  std::ifstream cert_in(dir / "certificates.json");
  if (!cert_in) throw corrupt("missing " + (dir / "certificates.json").string());
  nlohmann::json stored;
  try {
    stored = nlohmann::json::parse(cert_in);
  } catch (const nlohmann::json::exception& e) {
    throw corrupt(std::string("certificates.json: ") + e.what());
  }
  if (!stored.is_array()) throw corrupt("certificates.json is not an array");

  std::vector<CatalogEntry> entries;
  for (const auto& ref : detail::reference_keys()) {
    const std::string name = ref.name;
    const auto path = dir / (name + ".tri");
    CatalogEntry entry;
    entry.name = name;
    try {
      entry.complex = io::read_face_list(path.string());
      entry.certificate = certify(entry.complex);
      if (identify(entry.complex, entry.certificate) != name) {
        throw corrupt(path.string() + " identifies as another class");
      }
    } catch (const SurfaceError& e) {
      if (e.kind() == ErrorKind::CorruptCatalog) throw;
      throw corrupt(path.string() + ": " + e.what());
    }
    const auto it = std::find_if(stored.begin(), stored.end(), [&](const nlohmann::json& j) {
      return j.is_object() && j.value("name", "") == name;
    });
    if (it == stored.end()) throw corrupt("certificates.json lacks " + name);
    if (*it != certificate_json(name, entry.certificate)) {
      throw corrupt("certificates.json disagrees with " + path.string());
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

inline const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& name) {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw SurfaceError(ErrorKind::NoMatch, "no catalog entry " + name);
}

}  // namespace trisurf
