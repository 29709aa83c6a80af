#include "qcluster/valuation.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>

namespace qcluster {

std::vector<OrderedEdge> ordered_edge_labels(const SnakeGraph& g, const Matching& p, EdgeOrder order) {
  std::vector<OrderedEdge> out;
  for (int e = 0; e < g.num_edges(); ++e)
    if (p.contains(e)) out.push_back({e, g.edge_label(e)});
  if (order == EdgeOrder::FirstIncidence) {
    auto key = [&](int e) {
      const auto& [a, b] = g.edge_ends(e);
      return std::pair{std::min(a, b), std::max(a, b)};
    };
    std::stable_sort(out.begin(), out.end(),
                     [&](const OrderedEdge& x, const OrderedEdge& y) { return key(x.edge) < key(y.edge); });
  }
  return out;
}

CrossingMultiplicities crossing_multiplicities(const SnakeGraph& g, int s) {
  const auto& ks = g.crossings();
  CrossingMultiplicities m;
  for (int t = 0; t < static_cast<int>(ks.size()); ++t) {
    if (ks[t] != ks[s]) continue;
    if (t > s) ++m.m_plus;
    if (t < s) ++m.m_minus;
  }
  return m;
}

std::int64_t omega(const SnakeGraph& g, int s, const Matching& p, std::int64_t d, EdgeOrder order) {
  if (!can_twist(g, p, s)) throw ValuationError("omega: P cannot twist on tile " + std::to_string(s));
  const int tau = g.tile(s).diagonal;
  std::vector<int> own;
  for (Side side : kSides) own.push_back(g.edge_index(s, side));
  const std::vector<OrderedEdge> seq = ordered_edge_labels(g, p, order);
  std::optional<std::size_t> first, last;
  for (std::size_t u = 0; u < seq.size(); ++u) {
    if (std::find(own.begin(), own.end(), seq[u].edge) == own.end()) continue;
    if (!first) first = u;
    last = u;
  }
  std::int64_t n_plus = 0, n_minus = 0;
  for (std::size_t u = 0; u < seq.size(); ++u) {
    if (seq[u].label != tau) continue;
    if (u > *last) ++n_plus;
    if (u < *first) ++n_minus;
  }
  const CrossingMultiplicities m = crossing_multiplicities(g, s);
  const std::int64_t core = n_plus - m.m_plus - n_minus + m.m_minus;
  return (has_counterclockwise_pair(g, p, s) ? core : -core) * d;
}

std::int64_t ValuationMap::at(const Matching& p) const {
  auto it = std::lower_bound(matchings.begin(), matchings.end(), p);
  if (it == matchings.end() || !(*it == p)) throw ValuationError("matching " + p.to_string() + " is not perfect");
  return values[it - matchings.begin()];
}

ValuationMap compute_valuation(const SnakeGraph& g, std::int64_t d, const ValuationOptions& options) {
  return compute_valuation(g, twist_graph(g), d, options);
}

ValuationMap compute_valuation(const SnakeGraph& g, const TwistGraph& tg, std::int64_t d,
                               const ValuationOptions& options) {
  const std::size_t n = tg.vertices.size();
  std::vector<std::optional<std::int64_t>> value(n);
  const int start = tg.index_of(maximal_matching(g));
  const int bottom = tg.index_of(minimal_matching(g));
  if (start < 0 || bottom < 0) throw ValuationError("valuation ill-defined: P_+ or P_- is not a perfect matching");

  std::deque<int> todo{start};
  value[start] = 0;
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop_front();
    auto nbrs = tg.adjacency[v];
    if (options.reverse_tie_break) std::reverse(nbrs.begin(), nbrs.end());
    for (const auto& [tile, w] : nbrs) {
      if (value[w]) continue;
      value[w] = *value[v] - omega(g, tile, tg.vertices[v], d, options.order);
      todo.push_back(w);
    }
  }

  ValuationMap out;
  out.matchings = tg.vertices;
  out.values.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!value[v]) throw ValuationError("valuation ill-defined: twist graph is disconnected");
    out.values[v] = *value[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& [tile, w] : tg.adjacency[v]) {
      const std::int64_t om = omega(g, tile, tg.vertices[v], d, options.order);
      if (out.values[v] - out.values[w] != om)
        throw ValuationError("valuation ill-defined: twist of " + tg.vertices[v].to_string() + " on tile " +
                             std::to_string(tile + 1) + " gives difference " +
                             std::to_string(out.values[v] - out.values[w]) + " but Omega = " + std::to_string(om));
    }
  }
  if (out.values[bottom] != 0)
    throw ValuationError("valuation ill-defined: v(P_-) = " + std::to_string(out.values[bottom]));
  return out;
}

}  // namespace qcluster
