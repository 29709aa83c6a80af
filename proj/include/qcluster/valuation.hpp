#pragma once

// The valuation map on perfect matchings: v(P_+) = 0 and
// v(P) - v(twist(P, s)) = Omega(s, P), propagated over the twist graph.

#include "qcluster/snake_graph.hpp"

#include <stdexcept>
#include <vector>

namespace qcluster {

class ValuationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How matched edges are read "in order".
enum class EdgeOrder {
  TileMajor,       ///< owning tile, then S < W < E < N
  FirstIncidence,  ///< by the earliest vertex (in build order) each edge touches
};

struct OrderedEdge {
  int edge = -1;
  int label = -1;
};

std::vector<OrderedEdge> ordered_edge_labels(const SnakeGraph& g, const Matching& p,
                                             EdgeOrder order = EdgeOrder::TileMajor);

struct CrossingMultiplicities {
  int m_plus = 0;   ///< occurrences of the crossed arc after crossing s
  int m_minus = 0;  ///< occurrences before crossing s
};
CrossingMultiplicities crossing_multiplicities(const SnakeGraph& g, int s);

/// Omega(p_s, P) for a tile s (0-based) on which P can twist.
std::int64_t omega(const SnakeGraph& g, int s, const Matching& p, std::int64_t d,
                   EdgeOrder order = EdgeOrder::TileMajor);

struct ValuationMap {
  std::vector<Matching> matchings;  ///< ascending bit-string order
  std::vector<std::int64_t> values;

  std::int64_t at(const Matching& p) const;
};

struct ValuationOptions {
  EdgeOrder order = EdgeOrder::TileMajor;
  bool reverse_tie_break = false;  ///< visit twist neighbours in reverse tile order
};

/// BFS from P_+ over the twist graph.  Throws ValuationError("valuation
/// ill-defined: ...") when some twist edge disagrees with the propagated
/// values or v(P_-) != 0.
ValuationMap compute_valuation(const SnakeGraph& g, std::int64_t d, const ValuationOptions& options = {});
ValuationMap compute_valuation(const SnakeGraph& g, const TwistGraph& tg, std::int64_t d,
                               const ValuationOptions& options = {});

}  // namespace qcluster
