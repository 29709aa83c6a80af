#pragma once

// Standard small surfaces used by the CLI, tests and acceptance runs.

#include "qcluster/seeds.hpp"
#include "qcluster/surface.hpp"

#include <string>
#include <vector>

namespace qcluster {

/// Polygon with `vertices` marked points (counterclockwise 0..N-1), fan
/// triangulation from vertex 0.  Internal arc k-2 is the diagonal (0, k);
/// boundary arc n+i is the side (i, i+1 mod N).
Triangulation polygon_fan(int vertices);
/// Arc index of the fan triangulation for the segment (i, j), or -1 when the
/// segment is a diagonal outside the fan.
int polygon_fan_arc(int vertices, int i, int j);
/// The diagonal (i, j), i < j, as a crossing sequence against the fan.
CrossingSequence polygon_diagonal(int vertices, int i, int j);

/// Annulus with one marked point per boundary component: internal arcs 0, 1,
/// outer boundary 2, inner boundary 3.  `mirrored` reverses the orientation.
Triangulation annulus(bool mirrored = false);
/// Annulus with `outer` and `inner` marked points triangulated by a zigzag of
/// bridging arcs: step k of `pattern` ('O' or 'I') advances along the outer
/// or inner boundary.  Internal arcs are the bridging arcs 0..outer+inner-1,
/// then outer boundary segments, then inner ones.  annulus_zigzag("OI") is
/// annulus().
Triangulation annulus_zigzag(const std::string& pattern);

/// Principal quantum seed [B; I] with Lambda = [[0, -I], [I, B^T]].
QuantumSeed principal_seed(const Triangulation& t);

}  // namespace qcluster
