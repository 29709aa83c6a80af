#include "qcluster/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qcluster {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

int get_int(const json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw InputError(std::string(what) + ": missing field \"" + key + "\"");
  if (!j[key].is_number_integer()) throw InputError(std::string(what) + ": field \"" + key + "\" must be an integer");
  return j[key].get<int>();
}

IntMatrix get_matrix(const json& j, const char* key) {
  const json& rows = j.at(key);
  if (!rows.is_array() || rows.empty()) throw InputError(std::string("seed: \"") + key + "\" must be a non-empty list of rows");
  const std::size_t cols = rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != cols)
      throw InputError(std::string("seed: rows of \"") + key + "\" must be lists of equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!rows[i][c].is_number_integer()) throw InputError(std::string("seed: \"") + key + "\" entries must be integers");
      m(i, c) = rows[i][c].get<std::int64_t>();
    }
  }
  return m;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string read_source(const std::string& spec) {
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (spec[first] == '{' || spec[first] == '[')) return spec;
  std::ifstream in(spec);
  if (!in) throw InputError("cannot open " + spec);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Triangulation parse_surface(const std::string& text) {
  const json j = parse_json(text, "surface");
  if (!j.is_object()) throw InputError("surface: expected an object");
  const int n = get_int(j, "n_internal", "surface");
  const int b = get_int(j, "n_boundary", "surface");
  if (!j.contains("triangles") || !j["triangles"].is_array()) throw InputError("surface: missing list \"triangles\"");
  std::vector<Triangle> tris;
  for (const json& t : j["triangles"]) {
    if (!t.is_array() || t.size() != 3) throw InputError("surface: every triangle must list exactly 3 sides");
    Triangle tri{};
    for (int i = 0; i < 3; ++i) {
      if (!t[i].is_number_integer()) throw InputError("surface: triangle sides must be integers");
      tri[i] = t[i].get<int>();
    }
    tris.push_back(tri);
  }
  try {
    return Triangulation(n, b, std::move(tris));
  } catch (const SurfaceError& e) {
    throw InputError(std::string("surface: ") + e.what());
  }
}

CrossingSequence parse_arc(const std::string& text) {
  const json j = parse_json(text, "arc");
  if (!j.is_object()) throw InputError("arc: expected an object");
  CrossingSequence g;
  if (j.contains("arc")) g.arc = get_int(j, "arc", "arc");
  if (j.contains("crossings")) {
    if (!j["crossings"].is_array()) throw InputError("arc: \"crossings\" must be a list");
    for (const json& k : j["crossings"]) {
      if (!k.is_number_integer()) throw InputError("arc: crossings must be integers");
      g.crossings.push_back(k.get<int>());
    }
  }
  if (j.contains("start_triangle")) g.start_triangle = get_int(j, "start_triangle", "arc");
  if (j.contains("end_triangle")) g.end_triangle = get_int(j, "end_triangle", "arc");
  if (!g.crossings.empty() && !j.contains("start_triangle")) throw InputError("arc: missing field \"start_triangle\"");
  if (g.crossings.empty() && !g.arc) throw InputError("arc: give either \"crossings\" or \"arc\"");
  return g;
}

SeedSpec parse_seed(const std::string& text) {
  const json j = parse_json(text, "seed");
  if (!j.is_object() || !j.contains("Btilde")) throw InputError("seed: missing field \"Btilde\"");
  SeedSpec s;
  s.btilde = get_matrix(j, "Btilde");
  if (j.contains("Lambda")) s.lambda = get_matrix(j, "Lambda");
  return s;
}

std::string surface_to_json(const Triangulation& t) {
  json j;
  j["n_internal"] = t.n_internal();
  j["n_boundary"] = t.n_boundary();
  json tris = json::array();
  for (const Triangle& tri : t.triangles()) tris.push_back({tri[0], tri[1], tri[2]});
  j["triangles"] = tris;
  return j.dump();
}

std::string arc_to_json(const CrossingSequence& g) {
  json j;
  if (g.arc) j["arc"] = *g.arc;
  if (!g.crossings.empty()) j["crossings"] = g.crossings;
  if (g.start_triangle >= 0) j["start_triangle"] = g.start_triangle;
  if (g.end_triangle >= 0) j["end_triangle"] = g.end_triangle;
  return j.dump();
}

std::string matrix_to_json(const IntMatrix& m) { return matrix_json(m).dump(); }

}  // namespace qcluster
