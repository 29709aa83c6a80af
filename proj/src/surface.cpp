#include "qcluster/surface.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qcluster {

Triangulation::Triangulation(int n_internal, int n_boundary, std::vector<Triangle> triangles)
    : n_internal_(n_internal), n_boundary_(n_boundary), triangles_(std::move(triangles)) {
  if (n_internal_ < 0 || n_boundary_ < 0) throw SurfaceError("arc counts must be non-negative");
  if (triangles_.empty()) throw SurfaceError("triangulation has no triangles");
  incidence_.assign(n_arcs(), {});
  for (int t = 0; t < static_cast<int>(triangles_.size()); ++t) {
    const Triangle& tri = triangles_[t];
    for (int side : tri) {
      if (side < 0 || side >= n_arcs())
        throw SurfaceError("triangle " + std::to_string(t) + " references unknown arc " +
                           std::to_string(side));
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      throw SurfaceError("triangle " + std::to_string(t) +
                         " repeats a side (self-folded triangles are not supported)");
    for (int side : tri) incidence_[side].push_back(t);
  }
  for (int a = 0; a < n_arcs(); ++a) {
    const std::size_t want = is_internal(a) ? 2 : 1;
    if (incidence_[a].size() != want)
      throw SurfaceError("arc " + std::to_string(a) + " is a side of " +
                         std::to_string(incidence_[a].size()) + " triangles, expected " +
                         std::to_string(want));
  }
  for (int a = 0; a < n_internal_; ++a) {
    const Quadrilateral q = quadrilateral(*this, a);
    if (q.a1 == q.a3 && q.a2 == q.a4)
      throw SurfaceError("arc " + std::to_string(a) +
                         " has a1 = a3 and a2 = a4: torus with one marked point is excluded");
  }
  check_unpunctured();
}

void Triangulation::check_unpunctured() const {
  // Walk around the marked point at each corner: corner i of triangle t sits
  // between sides i and i+1; crossing side i+1 lands on the corner of the
  // neighbour that ends that side.  A walk that closes up without meeting a
  // boundary arc circles a puncture.
  const int n_tri = static_cast<int>(triangles_.size());
  for (int t0 = 0; t0 < n_tri; ++t0) {
    for (int c0 = 0; c0 < 3; ++c0) {
      int t = t0, c = c0;
      bool boundary = false;
      for (int step = 0; step < 3 * n_tri; ++step) {
        const int side = triangles_[t][(c + 1) % 3];
        if (!is_internal(side)) {
          boundary = true;
          break;
        }
        const int next = incidence_[side][0] == t ? incidence_[side][1] : incidence_[side][0];
        c = position(next, side);
        t = next;
        if (t == t0 && c == c0) break;
      }
      if (!boundary) throw SurfaceError("triangle " + std::to_string(t0) + " has a corner at a puncture; punctured surfaces are not supported");
    }
  }
}

bool Triangulation::has_side(int t, int arc) const {
  const Triangle& tri = triangles_.at(t);
  return std::find(tri.begin(), tri.end(), arc) != tri.end();
}

int Triangulation::position(int t, int arc) const {
  const Triangle& tri = triangles_.at(t);
  for (int i = 0; i < 3; ++i)
    if (tri[i] == arc) return i;
  throw SurfaceError("arc " + std::to_string(arc) + " is not a side of triangle " +
                     std::to_string(t));
}

int Triangulation::follows(int t, int arc) const {
  return triangles_[t][(position(t, arc) + 1) % 3];
}

int Triangulation::precedes(int t, int arc) const {
  return triangles_[t][(position(t, arc) + 2) % 3];
}

int Triangulation::across(int t, int arc) const {
  if (!is_internal(arc)) throw SurfaceError("boundary arc " + std::to_string(arc) + " has no far side");
  const auto& ts = incidence_.at(arc);
  if (ts[0] == t) return ts[1];
  if (ts[1] == t) return ts[0];
  throw SurfaceError("arc " + std::to_string(arc) + " is not a side of triangle " +
                     std::to_string(t));
}

IntMatrix signed_adjacency(const Triangulation& t) {
  const int n = t.n_internal();
  IntMatrix b = IntMatrix::Zero(n, n);
  for (const Triangle& tri : t.triangles()) {
    for (int i = 0; i < 3; ++i) {
      const int x = tri[i];
      const int y = tri[(i + 1) % 3];  // y follows x clockwise
      if (t.is_internal(x) && t.is_internal(y)) {
        b(x, y) += 1;
        b(y, x) -= 1;
      }
    }
  }
  return b;
}

Quadrilateral quadrilateral(const Triangulation& t, int tau) {
  if (!t.is_internal(tau)) throw SurfaceError("boundary arc has no flip quadrilateral");
  const auto& ts = t.triangles_of(tau);
  Quadrilateral q;
  q.tau = tau;
  q.triangle_14 = ts[0];
  q.triangle_23 = ts[1];
  q.a1 = t.follows(ts[0], tau);
  q.a4 = t.precedes(ts[0], tau);
  q.a3 = t.follows(ts[1], tau);
  q.a2 = t.precedes(ts[1], tau);
  return q;
}

Triangulation flip(const Triangulation& t, int tau) {
  const Quadrilateral q = quadrilateral(t, tau);
  // Quadrilateral boundary in clockwise order is a1, a4, a3, a2; the new
  // diagonal separates {a4, a3} from {a2, a1}.
  std::vector<Triangle> tris = t.triangles();
  tris[q.triangle_14] = {q.a4, q.a3, tau};
  tris[q.triangle_23] = {q.a2, q.a1, tau};
  return Triangulation(t.n_internal(), t.n_boundary(), std::move(tris));
}

ArcRoute validate_arc(const Triangulation& t, const CrossingSequence& gamma) {
  ArcRoute route;
  const int n_tri = static_cast<int>(t.triangles().size());
  auto check_triangle = [&](int tri, const char* what) {
    if (tri < 0 || tri >= n_tri)
      throw SurfaceError(std::string(what) + " " + std::to_string(tri) + " does not exist");
  };
  if (gamma.crossings.empty()) {
    if (!gamma.arc || *gamma.arc < 0 || *gamma.arc >= t.n_arcs())
      throw SurfaceError("an arc without crossings must name an arc of the triangulation");
    for (int tri : {gamma.start_triangle, gamma.end_triangle}) {
      if (tri < 0) continue;
      check_triangle(tri, "triangle");
      if (!t.has_side(tri, *gamma.arc))
        throw SurfaceError("arc " + std::to_string(*gamma.arc) + " is not a side of triangle " +
                           std::to_string(tri));
    }
    return route;
  }
  if (gamma.arc) throw SurfaceError("an arc with crossings must not name a triangulation arc");
  check_triangle(gamma.start_triangle, "start triangle");
  const auto& ks = gamma.crossings;
  const std::size_t d = ks.size();
  for (std::size_t j = 0; j < d; ++j) {
    if (!t.is_internal(ks[j]))
      throw SurfaceError("crossing " + std::to_string(j + 1) + " is arc " + std::to_string(ks[j]) +
                         ", which is not an internal arc");
  }
  int cur = gamma.start_triangle;
  if (!t.has_side(cur, ks[0]))
    throw SurfaceError("first crossed arc is not a side of the start triangle");
  route.triangles.push_back(cur);
  route.third_edges.assign(d, -1);
  for (std::size_t j = 0; j < d; ++j) {
    cur = t.across(cur, ks[j]);
    route.triangles.push_back(cur);
    if (j + 1 < d) {
      if (ks[j + 1] == ks[j] || !t.has_side(cur, ks[j + 1]))
        throw SurfaceError("crossings " + std::to_string(j + 1) + " and " + std::to_string(j + 2) +
                           " share no triangle");
      const Triangle& tri = t.triangle(cur);
      for (int side : tri)
        if (side != ks[j] && side != ks[j + 1]) route.third_edges[j + 1] = side;
    }
  }
  if (gamma.end_triangle >= 0 && gamma.end_triangle != cur)
    throw SurfaceError("arc ends in triangle " + std::to_string(cur) + ", not in the declared end triangle " +
                       std::to_string(gamma.end_triangle));
  return route;
}

CrossingSequence reversed(const Triangulation& t, const CrossingSequence& gamma) {
  const ArcRoute route = validate_arc(t, gamma);
  CrossingSequence r;
  if (gamma.crossings.empty()) {
    r = gamma;
    std::swap(r.start_triangle, r.end_triangle);
    return r;
  }
  r.crossings.assign(gamma.crossings.rbegin(), gamma.crossings.rend());
  r.start_triangle = route.triangles.back();
  r.end_triangle = route.triangles.front();
  return r;
}

namespace {

// Where an endpoint of a run through the flip quadrilateral lands after the
// flip: inside one of the two new triangles, or on an endpoint of tau'.
enum class Region { NewA, NewB, FlipEndpoint };

}  // namespace

CrossingSequence rewrite_through_flip(const Triangulation& t, const CrossingSequence& gamma, int tau) {
  const Quadrilateral q = quadrilateral(t, tau);
  const int ta = q.triangle_14;  // (tau, a1, a4) clockwise; becomes (a4, a3, tau')
  const int tb = q.triangle_23;  // (tau, a3, a2) clockwise; becomes (a2, a1, tau')
  const Triangulation flipped = flip(t, tau);
  const ArcRoute route = validate_arc(t, gamma);

  if (gamma.crossings.empty()) {
    CrossingSequence r;
    if (*gamma.arc == tau) {
      // tau runs between the two corners that tau' separates.
      r.crossings = {tau};
      r.start_triangle = ta;
      r.end_triangle = tb;
      return r;
    }
    r.arc = gamma.arc;
    const int home = flipped.triangles_of(*gamma.arc).front();
    r.start_triangle = r.end_triangle = home;
    return r;
  }

  const auto& ks = gamma.crossings;
  const int d = static_cast<int>(ks.size());
  const auto& tris = route.triangles;
  auto in_quad = [&](int tri) { return tri == ta || tri == tb; };

  // Region of a side occurrence of the quadrilateral boundary.
  auto side_region = [&](int tri, int arc) {
    if (tri == ta) return arc == q.a4 ? Region::NewA : Region::NewB;  // a1 -> new B
    return arc == q.a3 ? Region::NewA : Region::NewB;                  // a2 -> new B
  };
  // Region of the corner of `tri` opposite the crossed side `arc`.
  auto corner_region = [&](int tri, int arc) {
    if (arc == tau) return Region::FlipEndpoint;
    if (tri == ta) return arc == q.a1 ? Region::NewA : Region::NewB;
    return arc == q.a3 ? Region::NewB : Region::NewA;
  };
  auto slot = [&](Region r) { return r == Region::NewA ? ta : tb; };

  std::vector<std::vector<int>> segments;  // new triangles per segment
  std::vector<int> links;                  // preserved crossings between segments
  bool is_flip_arc = false;
  int i = 0;
  while (i <= d) {
    if (!in_quad(tris[i])) {
      segments.push_back({tris[i]});
      if (i < d) links.push_back(ks[i]);
      ++i;
      continue;
    }
    int j = i;
    while (j < d && ks[j] == tau) ++j;  // crossing ks[j] leads from tris[j] to tris[j+1]
    if (j - i > 1) throw SurfaceError("arc crosses the flipped arc twice in a row; not in minimal position");
    const Region entry = i == 0 ? corner_region(tris[0], ks[0]) : side_region(tris[i], ks[i - 1]);
    const Region exit = j == d ? corner_region(tris[d], ks[d - 1]) : side_region(tris[j], ks[j]);
    std::vector<int> seg;
    if (entry == Region::FlipEndpoint && exit == Region::FlipEndpoint) {
      is_flip_arc = true;
    } else if (entry == Region::FlipEndpoint) {
      seg = {slot(exit)};
    } else if (exit == Region::FlipEndpoint || entry == exit) {
      seg = {slot(entry)};
    } else {
      seg = {slot(entry), slot(exit)};
    }
    segments.push_back(std::move(seg));
    if (j < d) links.push_back(ks[j]);
    i = j + 1;
  }

  CrossingSequence r;
  if (is_flip_arc) {
    r.arc = tau;
    r.start_triangle = r.end_triangle = ta;
    return r;
  }
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (s > 0) r.crossings.push_back(links[s - 1]);
    if (segments[s].size() == 2) r.crossings.push_back(tau);
  }
  r.start_triangle = segments.front().front();
  r.end_triangle = segments.back().back();
  validate_arc(flipped, r);
  return r;
}

std::vector<int> flips_to_contain(const Triangulation& t0, const CrossingSequence& gamma0) {
  std::vector<int> flips;
  Triangulation t = t0;
  CrossingSequence gamma = gamma0;
  validate_arc(t, gamma);
  while (!gamma.crossings.empty()) {
    std::set<int> candidates(gamma.crossings.begin(), gamma.crossings.end());
    std::optional<CrossingSequence> best;
    int best_tau = -1;
    for (int tau : candidates) {
      CrossingSequence next = rewrite_through_flip(t, gamma, tau);
      if (next.size() < gamma.size() && (!best || next.size() < best->size())) {
        best = std::move(next);
        best_tau = tau;
      }
    }
    if (!best) throw SurfaceError("no flip lowers the crossing number; the crossing sequence is not a simple arc");
    t = flip(t, best_tau);
    gamma = std::move(*best);
    flips.push_back(best_tau);
  }
  if (!flips.empty() && gamma.arc != flips.back())
    throw SurfaceError("reduction ended on an arc other than the last flipped one");
  return flips;
}

std::vector<CrossingSequence> enumerate_arcs(const Triangulation& t, int max_crossings) {
  std::vector<CrossingSequence> out;
  auto canonical_key = [](const CrossingSequence& g) {
    return std::tuple(g.crossings, g.start_triangle, g.end_triangle);
  };
  std::vector<int> walk;
  std::function<void(int, int)> extend = [&](int start, int cur) {
    if (!walk.empty()) {
      CrossingSequence g{walk, start, cur, std::nullopt};
      const CrossingSequence rev = reversed(t, g);
      if (canonical_key(g) <= canonical_key(rev)) {
        try {
          flips_to_contain(t, g);
          out.push_back(g);
        } catch (const SurfaceError&) {
          // Not a simple arc (e.g. a loop winding twice around a hole).
        }
      }
    }
    if (static_cast<int>(walk.size()) == max_crossings) return;
    for (int side : t.triangle(cur)) {
      if (!t.is_internal(side) || (!walk.empty() && side == walk.back())) continue;
      walk.push_back(side);
      extend(start, t.across(cur, side));
      walk.pop_back();
    }
  };
  for (int s = 0; s < static_cast<int>(t.triangles().size()); ++s) extend(s, s);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return canonical_key(a) < canonical_key(b);
  });
  return out;
}

}  // namespace qcluster
