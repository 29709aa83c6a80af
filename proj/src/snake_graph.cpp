#include "qcluster/snake_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace qcluster {

char side_letter(Side s) {
  switch (s) {
    case Side::South: return 'S';
    case Side::West: return 'W';
    case Side::East: return 'E';
    case Side::North: return 'N';
  }
  return '?';
}

std::string Matching::to_string() const {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

int SnakeGraph::vertex_id(Point p) {
  auto it = std::find(vertices_.begin(), vertices_.end(), p);
  if (it != vertices_.end()) return static_cast<int>(it - vertices_.begin());
  vertices_.push_back(p);
  return static_cast<int>(vertices_.size()) - 1;
}

void SnakeGraph::add_edge(EdgeRef ref, int label, Point a, Point b) {
  edges_.push_back(ref);
  edge_labels_.push_back(label);
  edge_ends_.emplace_back(vertex_id(a), vertex_id(b));
  shared_.push_back(false);
}

SnakeGraph SnakeGraph::build(const Triangulation& t, const CrossingSequence& gamma) {
  const ArcRoute route = validate_arc(t, gamma);
  SnakeGraph g;
  g.n_internal_ = t.n_internal();
  g.n_arcs_ = t.n_arcs();
  g.crossings_ = gamma.crossings;
  const int d = static_cast<int>(gamma.crossings.size());
  if (d == 0) {
    g.lone_arc_ = *gamma.arc;
    g.add_edge(EdgeRef{}, g.lone_arc_, {0, 0}, {1, 0});
    return g;
  }

  for (int j = 0; j < d; ++j) {
    const int tau = gamma.crossings[j];
    const int before = route.triangles[j];
    const int after = route.triangles[j + 1];
    Tile tile;
    tile.diagonal = tau;
    tile.odd = j % 2 == 0;
    auto set = [&](Side s, int label) { tile.labels[static_cast<int>(s)] = label; };
    if (tile.odd) {
      set(Side::West, t.follows(before, tau));
      set(Side::South, t.precedes(before, tau));
      set(Side::East, t.follows(after, tau));
      set(Side::North, t.precedes(after, tau));
    } else {
      set(Side::South, t.follows(before, tau));
      set(Side::West, t.precedes(before, tau));
      set(Side::North, t.follows(after, tau));
      set(Side::East, t.precedes(after, tau));
    }
    if (j > 0) {
      const Tile& prev = g.tiles_.back();
      tile.x = prev.x + (g.glue_.back() == Glue::Right ? 1 : 0);
      tile.y = prev.y + (g.glue_.back() == Glue::Up ? 1 : 0);
      const Side entry = g.glue_.back() == Glue::Right ? Side::West : Side::South;
      if (tile.label(entry) != route.third_edges[j])
        throw std::logic_error("snake graph: shared edge label mismatch at tile " + std::to_string(j));
    }
    if (j + 1 < d) {
      const int third = route.third_edges[j + 1];
      if (tile.label(Side::East) == third) {
        g.glue_.push_back(Glue::Right);
      } else if (tile.label(Side::North) == third) {
        g.glue_.push_back(Glue::Up);
      } else {
        throw std::logic_error("snake graph: third side not on tile " + std::to_string(j));
      }
    }
    g.tiles_.push_back(tile);
  }

  g.add_edges();
  return g;
}

void SnakeGraph::add_edges() {
  for (int j = 0; j < size(); ++j) {
    const Tile& tile = tiles_[j];
    std::array<int, 4> ids{};
    for (Side s : kSides) {
      const bool inherited = j > 0 && ((glue_[j - 1] == Glue::Right && s == Side::West) ||
                                       (glue_[j - 1] == Glue::Up && s == Side::South));
      if (inherited) {
        const Side owner_side = s == Side::West ? Side::East : Side::North;
        const int e = tile_edges_[j - 1][static_cast<int>(owner_side)];
        shared_[e] = true;
        ids[static_cast<int>(s)] = e;
        continue;
      }
      const int x = tile.x, y = tile.y;
      Point a, b;
      switch (s) {
        case Side::South: a = {x, y}; b = {x + 1, y}; break;
        case Side::West: a = {x, y}; b = {x, y + 1}; break;
        case Side::East: a = {x + 1, y}; b = {x + 1, y + 1}; break;
        case Side::North: a = {x, y + 1}; b = {x + 1, y + 1}; break;
      }
      ids[static_cast<int>(s)] = static_cast<int>(edges_.size());
      add_edge(EdgeRef{j, s}, tile.label(s), a, b);
    }
    tile_edges_.push_back(ids);
  }
}

SnakeGraph SnakeGraph::from_shape(const std::vector<Glue>& glue) {
  SnakeGraph g;
  g.n_internal_ = 1;
  g.n_arcs_ = 1;
  g.glue_ = glue;
  for (std::size_t j = 0; j <= glue.size(); ++j) {
    Tile tile;
    tile.diagonal = 0;
    tile.odd = j % 2 == 0;
    if (j > 0) {
      tile.x = g.tiles_.back().x + (glue[j - 1] == Glue::Right ? 1 : 0);
      tile.y = g.tiles_.back().y + (glue[j - 1] == Glue::Up ? 1 : 0);
    }
    g.tiles_.push_back(tile);
    g.crossings_.push_back(0);
  }
  g.add_edges();
  return g;
}

std::pair<int, int> SnakeGraph::diagonal_ends(int j) const {
  const Tile& tile = tiles_.at(j);
  auto find = [&](Point p) {
    return static_cast<int>(std::find(vertices_.begin(), vertices_.end(), p) - vertices_.begin());
  };
  return {find({tile.x, tile.y + 1}), find({tile.x + 1, tile.y})};
}

std::string SnakeGraph::dump() const {
  std::ostringstream os;
  if (lone_arc_ >= 0) {
    os << "single edge " << lone_arc_ << '\n';
    return os.str();
  }
  for (int j = 0; j < size(); ++j) {
    const Tile& tile = tiles_[j];
    os << "tile " << j + 1 << " diagonal " << tile.diagonal << " at (" << tile.x << ',' << tile.y << ')';
    for (Side s : kSides) os << ' ' << side_letter(s) << '=' << tile.label(s);
    if (j + 1 < size()) os << (glue_[j] == Glue::Right ? " right" : " up");
    os << '\n';
  }
  return os.str();
}

bool is_perfect_matching(const SnakeGraph& g, const Matching& p) {
  if (static_cast<int>(p.bits.size()) != g.num_edges()) return false;
  std::vector<int> cover(g.num_vertices(), 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!p.contains(e)) continue;
    ++cover[g.edge_ends(e).first];
    ++cover[g.edge_ends(e).second];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

namespace {

std::vector<int> last_edges(const SnakeGraph& g) {
  std::vector<int> last(g.num_vertices(), -1);
  for (int e = 0; e < g.num_edges(); ++e) {
    last[g.edge_ends(e).first] = e;
    last[g.edge_ends(e).second] = e;
  }
  return last;
}

void search(const SnakeGraph& g, const std::vector<int>& last, int e, std::vector<bool>& covered,
            Matching& current, std::vector<Matching>& out) {
  if (e == g.num_edges()) {
    out.push_back(current);
    return;
  }
  const auto [u, v] = g.edge_ends(e);
  const bool u_closes = last[u] == e, v_closes = last[v] == e;
  if (!(u_closes && !covered[u]) && !(v_closes && !covered[v]))
    search(g, last, e + 1, covered, current, out);
  if (!covered[u] && !covered[v]) {
    covered[u] = covered[v] = true;
    current.bits[e] = true;
    search(g, last, e + 1, covered, current, out);
    current.bits[e] = false;
    covered[u] = covered[v] = false;
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(const SnakeGraph& g) {
  const std::vector<int> last = last_edges(g);
  std::vector<bool> covered(g.num_vertices(), false);
  Matching current{std::vector<bool>(g.num_edges(), false)};
  std::vector<Matching> out;
  search(g, last, 0, covered, current, out);
  return out;
}

Integer count_matchings(const SnakeGraph& g) {
  const std::vector<int> last = last_edges(g);
  std::map<std::vector<bool>, Integer> states{{std::vector<bool>(g.num_vertices(), false), Integer(1)}};
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge_ends(e);
    std::map<std::vector<bool>, Integer> next;
    auto close = [&](std::vector<bool> s, const Integer& c) {
      for (int w : {u, v}) {
        if (last[w] != e) continue;
        if (!s[w]) return;
        s[w] = false;
      }
      next[std::move(s)] += c;
    };
    for (const auto& [s, c] : states) {
      close(s, c);
      if (!s[u] && !s[v]) {
        std::vector<bool> taken = s;
        taken[u] = taken[v] = true;
        close(std::move(taken), c);
      }
    }
    states = std::move(next);
  }
  Integer total = 0;
  for (const auto& kv : states) total += kv.second;
  return total;
}

namespace {

// Sides clockwise to the diagonal, i.e. those that follow it in T.
std::array<Side, 2> clockwise_pair(const Tile& t) {
  return t.odd ? std::array{Side::West, Side::East} : std::array{Side::South, Side::North};
}
std::array<Side, 2> counterclockwise_pair(const Tile& t) {
  return t.odd ? std::array{Side::South, Side::North} : std::array{Side::West, Side::East};
}

Matching boundary_matching(const SnakeGraph& g, bool counterclockwise) {
  Matching p{std::vector<bool>(g.num_edges(), false)};
  if (g.lone_arc() >= 0) {
    p.bits[0] = true;
    return p;
  }
  for (int j = 0; j < g.size(); ++j) {
    const Tile& tile = g.tile(j);
    for (Side s : counterclockwise ? counterclockwise_pair(tile) : clockwise_pair(tile)) {
      const int e = g.edge_index(j, s);
      if (!g.is_shared(e)) p.bits[e] = true;
    }
  }
  return p;
}

}  // namespace

Matching minimal_matching(const SnakeGraph& g) { return boundary_matching(g, false); }
Matching maximal_matching(const SnakeGraph& g) { return boundary_matching(g, true); }

bool can_twist(const SnakeGraph& g, const Matching& p, int j) {
  if (j < 0 || j >= g.size()) return false;
  auto in = [&](Side s) { return p.contains(g.edge_index(j, s)); };
  const bool sn = in(Side::South) && in(Side::North);
  const bool we = in(Side::West) && in(Side::East);
  const int count = in(Side::South) + in(Side::North) + in(Side::West) + in(Side::East);
  return count == 2 && (sn || we);
}

Matching twist(const SnakeGraph& g, const Matching& p, int j) {
  if (!can_twist(g, p, j)) throw std::invalid_argument("tile " + std::to_string(j) + " is not twistable");
  Matching r = p;
  for (Side s : kSides) {
    const int e = g.edge_index(j, s);
    r.bits[e] = !r.bits[e];
  }
  return r;
}

bool has_counterclockwise_pair(const SnakeGraph& g, const Matching& p, int j) {
  const auto pair = counterclockwise_pair(g.tile(j));
  return p.contains(g.edge_index(j, pair[0])) && p.contains(g.edge_index(j, pair[1]));
}

int TwistGraph::index_of(const Matching& p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || !(*it == p)) return -1;
  return static_cast<int>(it - vertices.begin());
}

bool TwistGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<bool> seen(vertices.size(), false);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop();
    for (const auto& [tile, w] : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        todo.push(w);
      }
    }
  }
  return count == vertices.size();
}

TwistGraph twist_graph(const SnakeGraph& g, std::vector<Matching> matchings) {
  TwistGraph tg;
  std::sort(matchings.begin(), matchings.end());
  tg.vertices = std::move(matchings);
  tg.adjacency.resize(tg.vertices.size());
  for (std::size_t i = 0; i < tg.vertices.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      if (!can_twist(g, tg.vertices[i], j)) continue;
      const int w = tg.index_of(twist(g, tg.vertices[i], j));
      if (w < 0) throw std::logic_error("twist left the set of perfect matchings");
      tg.adjacency[i].emplace_back(j, w);
    }
  }
  return tg;
}

TwistGraph twist_graph(const SnakeGraph& g) { return twist_graph(g, enumerate_matchings(g)); }

std::vector<bool> enclosed_tiles(const SnakeGraph& g, const Matching& p) {
  const Matching base = minimal_matching(g);
  std::vector<bool> inside(g.size(), false);
  // Vertical edges of the symmetric difference, as (x, row).
  std::vector<std::pair<int, int>> walls;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (p.contains(e) == base.contains(e)) continue;
    const auto& [a, b] = g.edge_ends(e);
    const auto& pa = g.vertices()[a];
    const auto& pb = g.vertices()[b];
    if (pa.first == pb.first) walls.emplace_back(pa.first, std::min(pa.second, pb.second));
  }
  for (int j = 0; j < g.size(); ++j) {
    const Tile& tile = g.tile(j);
    int crossings = 0;
    for (const auto& [x, row] : walls)
      if (row == tile.y && x <= tile.x) ++crossings;
    inside[j] = crossings % 2 == 1;
  }
  return inside;
}

Exponent height_exponent(const SnakeGraph& g, const Matching& p) {
  Exponent h = Exponent::Zero(g.n_internal());
  const std::vector<bool> inside = enclosed_tiles(g, p);
  for (int j = 0; j < g.size(); ++j)
    if (inside[j]) h[g.tile(j).diagonal] += 1;
  return h;
}

Exponent weight_exponent(const SnakeGraph& g, const Matching& p) {
  Exponent w = Exponent::Zero(g.n_internal());
  for (int e = 0; e < g.num_edges(); ++e) {
    const int label = g.edge_label(e);
    if (p.contains(e) && label < g.n_internal()) w[label] += 1;
  }
  return w;
}

Exponent crossing_exponent(const SnakeGraph& g) {
  Exponent c = Exponent::Zero(g.n_internal());
  for (int k : g.crossings()) c[k] += 1;
  return c;
}

const char* to_string(TauClassType t) {
  switch (t) {
    case TauClassType::I: return "I";
    case TauClassType::II: return "II";
    case TauClassType::III: return "III";
    case TauClassType::IV: return "IV";
  }
  return "?";
}

std::vector<TauClass> tau_classes(const SnakeGraph& g, int tau) {
  std::vector<int> labelled;
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.lone_arc() < 0 && g.edge_label(e) == tau) labelled.push_back(e);
  if (labelled.empty()) return {};

  auto touches = [&](int e, std::pair<int, int> ends) {
    const auto& [a, b] = g.edge_ends(e);
    return a == ends.first || a == ends.second || b == ends.first || b == ends.second;
  };
  auto shares_vertex = [&](int e, int f) {
    const auto& [a, b] = g.edge_ends(e);
    const auto& [c, d] = g.edge_ends(f);
    return a == c || a == d || b == c || b == d;
  };

  std::vector<int> parent(labelled.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int i) { return parent[i] == i ? i : parent[i] = root(parent[i]); };
  std::vector<bool> on_diagonal(labelled.size(), false);
  for (int j = 0; j < g.size(); ++j) {
    if (g.tile(j).diagonal != tau) continue;
    const auto ends = g.diagonal_ends(j);
    int first = -1;
    for (std::size_t i = 0; i < labelled.size(); ++i) {
      if (!touches(labelled[i], ends)) continue;
      on_diagonal[i] = true;
      if (first < 0) first = static_cast<int>(i);
      else parent[root(static_cast<int>(i))] = root(first);
    }
  }

  std::map<int, TauClass> by_root;
  for (std::size_t i = 0; i < labelled.size(); ++i) by_root[root(static_cast<int>(i))].edges.push_back(labelled[i]);
  std::vector<TauClass> classes;
  for (auto& [r, cls] : by_root) {
    if (cls.edges.size() > 2) throw std::logic_error("tau class with more than two edges");
    if (cls.edges.size() == 2) {
      cls.type = shares_vertex(cls.edges[0], cls.edges[1]) ? TauClassType::II : TauClassType::I;
    } else {
      cls.type = on_diagonal[r] ? TauClassType::III : TauClassType::IV;
    }
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const TauClass& a, const TauClass& b) { return a.edges.front() < b.edges.front(); });
  return classes;
}

std::vector<int> nu_signature(const std::vector<TauClass>& classes, const Matching& p) {
  std::vector<int> nu;
  nu.reserve(classes.size());
  for (const TauClass& cls : classes) {
    int count = 0;
    for (int e : cls.edges) count += p.contains(e);
    nu.push_back(cls.type == TauClassType::IV ? count : count - 1);
  }
  return nu;
}

bool nu_in_range(const std::vector<TauClass>& classes, const std::vector<int>& nu) {
  if (classes.size() != nu.size()) return false;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    int lo = -1, hi = 0;
    switch (classes[i].type) {
      case TauClassType::I: hi = 1; break;
      case TauClassType::II:
      case TauClassType::III: break;
      case TauClassType::IV: lo = 0; hi = 1; break;
    }
    if (nu[i] < lo || nu[i] > hi) return false;
  }
  return true;
}

}  // namespace qcluster
