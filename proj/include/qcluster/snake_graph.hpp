#pragma once

// Snake graphs of arcs, their perfect matchings, twists and the per-matching
// monomial data (weight, crossing, height).
//
// Planar convention: tile j is the unit square with lower-left corner
// (x_j, y_j) and an NW-SE diagonal.  Its {W, S} half comes from Delta_{j-1}
// and its {N, E} half from Delta_j.  On odd tiles (1-based) W and E carry the
// sides following the diagonal clockwise, S and N the preceding ones; even
// tiles swap the roles.  Tile j+1 sits to the right of tile j when the third
// side of Delta_j lands on the east edge, and above it otherwise.

#include "qcluster/laurent.hpp"
#include "qcluster/surface.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace qcluster {

/// Tile sides, listed in the canonical intra-tile order.
enum class Side { South = 0, West = 1, East = 2, North = 3 };
inline constexpr std::array<Side, 4> kSides{Side::South, Side::West, Side::East, Side::North};
char side_letter(Side s);

enum class Glue { Right, Up };

struct Tile {
  int diagonal = -1;
  std::array<int, 4> labels{};  ///< arc label per Side
  bool odd = true;              ///< 1-based index is odd
  int x = 0, y = 0;             ///< lower-left corner

  int label(Side s) const { return labels[static_cast<int>(s)]; }
};

/// A positional edge: a tile side, with shared sides owned by the lower tile.
/// tile == -1 marks the lone edge of the graph of an arc of T.
struct EdgeRef {
  int tile = -1;
  Side side = Side::South;
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

/// A set of edges in canonical edge order, ordered as a bit string.
struct Matching {
  std::vector<bool> bits;

  bool contains(int edge) const { return bits[edge]; }
  std::string to_string() const;
  friend bool operator==(const Matching&, const Matching&) = default;
  friend bool operator<(const Matching& a, const Matching& b) { return a.bits < b.bits; }
};

class SnakeGraph {
 public:
  using Point = std::pair<int, int>;

  /// Builds G_{T,gamma}; throws SurfaceError if gamma is not a valid arc.
  static SnakeGraph build(const Triangulation& t, const CrossingSequence& gamma);
  /// A graph with the given gluing and every label and diagonal equal to 0,
  /// for shape-only questions such as matching counts.
  static SnakeGraph from_shape(const std::vector<Glue>& glue);

  int n_internal() const { return n_internal_; }
  int n_arcs() const { return n_arcs_; }
  /// Number of tiles d.
  int size() const { return static_cast<int>(tiles_.size()); }
  const std::vector<Tile>& tiles() const { return tiles_; }
  const Tile& tile(int j) const { return tiles_.at(j); }
  /// glue()[j] places tile j+1 relative to tile j.
  const std::vector<Glue>& glue() const { return glue_; }
  const std::vector<int>& crossings() const { return crossings_; }
  /// Arc of T when the graph is a single edge (d = 0), else -1.
  int lone_arc() const { return lone_arc_; }

  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<EdgeRef>& edges() const { return edges_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  int edge_label(int e) const { return edge_labels_[e]; }
  const std::pair<int, int>& edge_ends(int e) const { return edge_ends_[e]; }
  /// Canonical index of side s of tile j (shared sides resolve to one index).
  int edge_index(int j, Side s) const { return tile_edges_.at(j)[static_cast<int>(s)]; }
  bool is_shared(int e) const { return shared_[e]; }
  /// Vertex indices of the diagonal (NW and SE corners) of tile j.
  std::pair<int, int> diagonal_ends(int j) const;

  /// One line per tile (labels, diagonal, glue) for debugging.
  std::string dump() const;

 private:
  int n_internal_ = 0;
  int n_arcs_ = 0;
  int lone_arc_ = -1;
  std::vector<int> crossings_;
  std::vector<Tile> tiles_;
  std::vector<Glue> glue_;
  std::vector<EdgeRef> edges_;
  std::vector<int> edge_labels_;
  std::vector<std::pair<int, int>> edge_ends_;
  std::vector<bool> shared_;
  std::vector<std::array<int, 4>> tile_edges_;
  std::vector<Point> vertices_;

  void add_edges();
  int vertex_id(Point p);
  void add_edge(EdgeRef ref, int label, Point a, Point b);
};

bool is_perfect_matching(const SnakeGraph& g, const Matching& p);

/// All perfect matchings in ascending bit-string order.  Frontier search over
/// the canonical edge order: a vertex whose last incident edge has been
/// decided must be covered.
std::vector<Matching> enumerate_matchings(const SnakeGraph& g);
/// Number of perfect matchings by dynamic programming over frontier states.
Integer count_matchings(const SnakeGraph& g);

/// P_-: every tile contributes its unshared sides clockwise to the diagonal.
Matching minimal_matching(const SnakeGraph& g);
/// P_+: every tile contributes its unshared sides counterclockwise to the diagonal.
Matching maximal_matching(const SnakeGraph& g);

/// True when two opposite sides of tile j are in P.
bool can_twist(const SnakeGraph& g, const Matching& p, int j);
/// Replaces the two matched sides of tile j by the other two; throws if not twistable.
Matching twist(const SnakeGraph& g, const Matching& p, int j);
/// Whether tile j's matched pair in P is its counterclockwise pair (a2, a4).
bool has_counterclockwise_pair(const SnakeGraph& g, const Matching& p, int j);

struct TwistGraph {
  std::vector<Matching> vertices;
  /// adjacency[i] lists (tile, neighbour vertex index).
  std::vector<std::vector<std::pair<int, int>>> adjacency;
  int index_of(const Matching& p) const;
  bool connected() const;
};
TwistGraph twist_graph(const SnakeGraph& g, std::vector<Matching> matchings);
TwistGraph twist_graph(const SnakeGraph& g);

/// Tiles enclosed by the cycles of the symmetric difference of P and P_-.
std::vector<bool> enclosed_tiles(const SnakeGraph& g, const Matching& p);
/// Per internal arc, the number of enclosed tiles with that diagonal.
Exponent height_exponent(const SnakeGraph& g, const Matching& p);
/// Per internal arc, the number of matched edges carrying that label.
Exponent weight_exponent(const SnakeGraph& g, const Matching& p);
/// Per internal arc, the number of times gamma crosses it.
Exponent crossing_exponent(const SnakeGraph& g);

enum class TauClassType { I, II, III, IV };
const char* to_string(TauClassType t);

struct TauClass {
  TauClassType type = TauClassType::IV;
  std::vector<int> edges;  ///< canonical edge indices
};

/// Edges labelled tau, grouped by incidence with diagonals of tiles whose
/// diagonal is tau, ordered by tile.
std::vector<TauClass> tau_classes(const SnakeGraph& g, int tau);
/// Matched edges per class minus one for types I-III, plus zero for type IV.
std::vector<int> nu_signature(const std::vector<TauClass>& classes, const Matching& p);
/// Whether a signature lies in the admissible ranges of the class types.
bool nu_in_range(const std::vector<TauClass>& classes, const std::vector<int>& nu);

}  // namespace qcluster
