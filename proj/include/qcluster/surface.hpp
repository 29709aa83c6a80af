#pragma once

// Combinatorial model of an unpunctured surface: an indexed triangulation
// whose triangles list their sides in clockwise order.  Arcs are abstract
// labels; internal arcs are 0..n-1 and boundary arcs n..n+b-1.

#include "qcluster/laurent.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcluster {

class SurfaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ArcKind { Internal, Boundary };

/// Sides of a triangle in clockwise order.
using Triangle = std::array<int, 3>;

/// The flip quadrilateral of an internal arc tau: (a1, a4, tau) and
/// (a2, a3, tau) are the two triangles, a1 and a3 follow tau clockwise,
/// a2 and a4 precede it.
struct Quadrilateral {
  int tau = -1;
  int a1 = -1, a2 = -1, a3 = -1, a4 = -1;
  int triangle_14 = -1;  ///< index of the triangle (a1, a4, tau)
  int triangle_23 = -1;  ///< index of the triangle (a2, a3, tau)
};

class Triangulation {
 public:
  Triangulation() = default;
  /// Validates on construction; throws SurfaceError naming the failed invariant.
  Triangulation(int n_internal, int n_boundary, std::vector<Triangle> triangles);

  int n_internal() const { return n_internal_; }
  int n_boundary() const { return n_boundary_; }
  int n_arcs() const { return n_internal_ + n_boundary_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const Triangle& triangle(int t) const { return triangles_.at(t); }

  ArcKind kind(int arc) const {
    return arc < n_internal_ ? ArcKind::Internal : ArcKind::Boundary;
  }
  bool is_internal(int arc) const { return arc >= 0 && arc < n_internal_; }

  /// Triangles having `arc` as a side (two for internal arcs, one for boundary).
  const std::vector<int>& triangles_of(int arc) const { return incidence_.at(arc); }
  bool has_side(int t, int arc) const;
  /// Position 0..2 of `arc` in triangle t; throws if absent.
  int position(int t, int arc) const;
  /// The side after / before `arc` in the clockwise order of triangle t.
  int follows(int t, int arc) const;
  int precedes(int t, int arc) const;
  /// The triangle across internal arc `arc` from triangle t.
  int across(int t, int arc) const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  void check_unpunctured() const;

  int n_internal_ = 0;
  int n_boundary_ = 0;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<int>> incidence_;
};

/// b_ij = sum over triangles of +1 when arc j follows arc i clockwise and -1
/// when i follows j; internal arcs only.
IntMatrix signed_adjacency(const Triangulation& t);

Quadrilateral quadrilateral(const Triangulation& t, int tau);

/// Replaces (a1, a4, tau), (a2, a3, tau) by (a1, a2, tau'), (a3, a4, tau');
/// tau' reuses the index of tau and the two triangle slots are kept.
Triangulation flip(const Triangulation& t, int tau);

/// An oriented arc given by the internal arcs it crosses in order together
/// with the triangles containing its endpoints.  An arc of the triangulation
/// itself has no crossings and is named by `arc`.
struct CrossingSequence {
  std::vector<int> crossings;
  int start_triangle = -1;
  int end_triangle = -1;
  std::optional<int> arc;

  std::size_t size() const { return crossings.size(); }
  friend bool operator==(const CrossingSequence&, const CrossingSequence&) = default;
};

/// The triangles visited by a validated arc: triangles[j] is Delta_j for
/// j = 0..d, and third_edges[j] (1 <= j < d) is the side of Delta_j other
/// than the j-th and (j+1)-th crossed arcs (index 0 unused).
struct ArcRoute {
  std::vector<int> triangles;
  std::vector<int> third_edges;
};

/// Checks that consecutive crossings bound a common triangle along the walk
/// from start_triangle, that only internal arcs are crossed, and that the walk
/// ends in end_triangle.  Throws SurfaceError otherwise.
ArcRoute validate_arc(const Triangulation& t, const CrossingSequence& gamma);

/// The same arc traversed in the opposite direction.
CrossingSequence reversed(const Triangulation& t, const CrossingSequence& gamma);

/// The crossing sequence of gamma with respect to flip(t, tau).
CrossingSequence rewrite_through_flip(const Triangulation& t, const CrossingSequence& gamma, int tau);

/// A flip sequence after which gamma belongs to the triangulation, occupying
/// the slot of the last flip.  Each flip strictly lowers the crossing count.
std::vector<int> flips_to_contain(const Triangulation& t, const CrossingSequence& gamma);

/// All arcs crossing between 1 and max_crossings internal arcs, one
/// orientation each, obtained as non-backtracking walks in the dual graph.
std::vector<CrossingSequence> enumerate_arcs(const Triangulation& t, int max_crossings);

}  // namespace qcluster
