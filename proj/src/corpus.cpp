#include "qcluster/corpus.hpp"

#include <algorithm>
#include <string>

namespace qcluster {

Triangulation polygon_fan(int vertices) {
  if (vertices < 4) throw SurfaceError("a polygon needs at least 4 vertices to have internal arcs");
  const int n = vertices - 3;
  std::vector<Triangle> tris;
  for (int k = 1; k + 1 < vertices; ++k) {
    tris.push_back({polygon_fan_arc(vertices, 0, k + 1), polygon_fan_arc(vertices, k, k + 1),
                    polygon_fan_arc(vertices, 0, k)});
  }
  return Triangulation(n, vertices, std::move(tris));
}

int polygon_fan_arc(int vertices, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= vertices || i == j) throw SurfaceError("no polygon segment (" + std::to_string(i) + ", " +
                                                           std::to_string(j) + ")");
  const int n = vertices - 3;
  if (j == i + 1) return n + i;
  if (i == 0 && j == vertices - 1) return n + vertices - 1;
  if (i == 0) return j - 2;
  return -1;
}

CrossingSequence polygon_diagonal(int vertices, int i, int j) {
  if (i > j) std::swap(i, j);
  CrossingSequence g;
  const int own = polygon_fan_arc(vertices, i, j);
  if (own >= 0) {
    g.arc = own;
    return g;
  }
  for (int k = i + 1; k < j; ++k) g.crossings.push_back(k - 2);
  g.start_triangle = i - 1;
  g.end_triangle = j - 2;
  return g;
}

Triangulation annulus(bool mirrored) {
  if (mirrored) return Triangulation(2, 2, {Triangle{0, 1, 2}, Triangle{0, 1, 3}});
  return Triangulation(2, 2, {Triangle{1, 0, 2}, Triangle{1, 0, 3}});
}

Triangulation annulus_zigzag(const std::string& pattern) {
  const int n = static_cast<int>(pattern.size());
  const int outer = static_cast<int>(std::count(pattern.begin(), pattern.end(), 'O'));
  const int inner = static_cast<int>(std::count(pattern.begin(), pattern.end(), 'I'));
  if (outer + inner != n || outer == 0 || inner == 0)
    throw SurfaceError("zigzag pattern must consist of 'O' and 'I' with at least one of each");
  std::vector<Triangle> tris;
  int o = 0, i = 0;
  for (int k = 0; k < n; ++k) {
    const int here = k, next = (k + 1) % n;
    if (pattern[k] == 'O') tris.push_back({next, here, n + o++});
    else tris.push_back({here, next, n + outer + i++});
  }
  return Triangulation(n, n, std::move(tris));
}

QuantumSeed principal_seed(const Triangulation& t) {
  const IntMatrix b = signed_adjacency(t);
  return QuantumSeed::make(principal_extension(b), principal_lambda(b));
}

}  // namespace qcluster
