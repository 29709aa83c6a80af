#pragma once

// JSON readers and writers for surfaces, arcs and seeds.
//
//   surface: {"n_internal": n, "n_boundary": b, "triangles": [[i, j, k], ...]}
//   arc:     {"crossings": [...], "start_triangle": t, "end_triangle": t}
//            or {"arc": a} for an arc of the triangulation
//   seed:    {"Btilde": [[...], ...], "Lambda": [[...], ...]}

#include "qcluster/seeds.hpp"
#include "qcluster/surface.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace qcluster {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text of `spec` if it starts with '{' or '[', otherwise the contents of the file it names.
std::string read_source(const std::string& spec);

Triangulation parse_surface(const std::string& text);
CrossingSequence parse_arc(const std::string& text);

struct SeedSpec {
  IntMatrix btilde;
  std::optional<IntMatrix> lambda;
};
SeedSpec parse_seed(const std::string& text);

std::string surface_to_json(const Triangulation& t);
std::string arc_to_json(const CrossingSequence& g);
std::string matrix_to_json(const IntMatrix& m);

}  // namespace qcluster
