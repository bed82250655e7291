#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "trisurf/complex.hpp"
#include "trisurf/error.hpp"
#include "trisurf/permutation.hpp"

namespace trisurf::io {

/// A vertex label: a nonnegative integer, or the letters u and v which stand
/// for 10 and 11.
inline VertexId parse_label(const std::string& token, int line_no) {
  if (token == "u") return 10;
  if (token == "v") return 11;
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos ||
      token.size() > 9) {
    throw SurfaceError(ErrorKind::Parse,
                       "line " + std::to_string(line_no) + ": bad label '" + token + "'");
  }
  return static_cast<VertexId>(std::stol(token));
}

/// Splits the input into data lines of labels; '#' starts a comment.
inline std::vector<std::vector<VertexId>> read_label_lines(std::istream& in) {
  std::vector<std::vector<VertexId>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::vector<VertexId> row;
    for (std::string tok; tokens >> tok;) row.push_back(parse_label(tok, line_no));
    if (row.empty()) continue;
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Face-list format: one face per line, exactly three labels.
inline Complex parse_face_list(std::istream& in) {
  std::vector<std::array<VertexId, 3>> faces;
  for (const auto& row : read_label_lines(in)) {
    if (row.size() != 3) {
      throw SurfaceError(ErrorKind::Parse, "face line must have exactly 3 labels, got " +
                                               std::to_string(row.size()));
    }
    faces.push_back({row[0], row[1], row[2]});
  }
  return Complex::from_faces(faces);
}

inline Complex parse_face_list(const std::string& text) {
  std::istringstream in(text);
  return parse_face_list(in);
}

inline Complex read_face_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SurfaceError(ErrorKind::Parse, "cannot open " + path);
  return parse_face_list(in);
}

/// Cycle notation as written by Permutation::to_cycle_string, e.g. "(0,1,2)(3,4)";
/// "()" is the identity.
inline Permutation parse_permutation(int n, const std::string& text) {
  std::vector<std::vector<VertexId>> cycles;
  std::size_t pos = 0;
  auto bad = [&] { return SurfaceError(ErrorKind::Parse, "bad cycle notation '" + text + "'"); };
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw bad();
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw bad();
    std::vector<VertexId> cycle;
    std::istringstream body(text.substr(pos + 1, close - pos - 1));
    for (std::string tok; std::getline(body, tok, ',');) {
      tok.erase(0, tok.find_first_not_of(' '));
      tok.erase(tok.find_last_not_of(' ') + 1);
      cycle.push_back(parse_label(tok, 1));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  return Permutation::from_cycles(n, cycles);
}

/// Sorted faces, one "a b c" line each. A nonempty header becomes a leading
/// comment line.
inline std::string write_face_list(const Complex& k, const std::string& header = {}) {
  std::ostringstream out;
  if (!header.empty()) out << "# " << header << '\n';
  for (const auto& f : k.faces()) out << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  return out.str();
}

}  // namespace trisurf::io
