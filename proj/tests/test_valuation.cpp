#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace qcluster;

namespace {

const CrossingSequence kGolden{{0, 1, 0, 1, 0}, 0, 1, std::nullopt};

std::vector<int> labels(const std::vector<OrderedEdge>& seq) {
  std::vector<int> out;
  for (const OrderedEdge& e : seq) out.push_back(e.label);
  return out;
}

std::vector<SnakeGraph> corpus_graphs(int max_crossings) {
  std::vector<SnakeGraph> out;
  for (const auto& inst : qtest::extended_corpus(max_crossings)) out.push_back(SnakeGraph::build(inst.t, inst.arc));
  return out;
}

}  // namespace

TEST_CASE("ordered labels of the minimal matchings") {
  const SnakeGraph one = SnakeGraph::build(polygon_fan(4), {{0}, 0, 1, std::nullopt});
  CHECK(ordered_edge_labels(one, minimal_matching(one)).size() == 2);

  const SnakeGraph golden = SnakeGraph::build(annulus(), kGolden);
  CHECK(labels(ordered_edge_labels(golden, minimal_matching(golden))) == std::vector<int>{2, 0, 0, 0, 0, 3});
}

TEST_CASE("the mutable pair is adjacent in tile-major order") {
  for (const SnakeGraph& g : corpus_graphs(7)) {
    for (const Matching& p : enumerate_matchings(g)) {
      const auto seq = ordered_edge_labels(g, p);
      for (int s = 0; s < g.size(); ++s) {
        if (!can_twist(g, p, s)) continue;
        std::vector<std::size_t> at;
        for (std::size_t u = 0; u < seq.size(); ++u)
          for (Side side : kSides)
            if (seq[u].edge == g.edge_index(s, side)) at.push_back(u);
        REQUIRE(at.size() == 2);
        CHECK(at[1] == at[0] + 1);
      }
    }
  }
}

TEST_CASE("crossing multiplicities count the other crossings of the same arc") {
  for (const SnakeGraph& g : corpus_graphs(7)) {
    const auto& ks = g.crossings();
    for (int s = 0; s < g.size(); ++s) {
      const CrossingMultiplicities m = crossing_multiplicities(g, s);
      CHECK(m.m_plus + m.m_minus + 1 == std::count(ks.begin(), ks.end(), ks[s]));
    }
  }
}

TEST_CASE("omega is antisymmetric, scales with d and is a cocycle on commuting twists") {
  for (const SnakeGraph& g : corpus_graphs(7)) {
    for (const Matching& p : enumerate_matchings(g)) {
      for (int s = 0; s < g.size(); ++s) {
        if (!can_twist(g, p, s)) {
          CHECK_THROWS_AS(omega(g, s, p, 1), ValuationError);
          continue;
        }
        const Matching ps = twist(g, p, s);
        const std::int64_t w = omega(g, s, p, 1);
        CHECK(omega(g, s, ps, 1) == -w);
        CHECK(omega(g, s, p, 3) == 3 * w);
        for (int t = s + 2; t < g.size(); ++t) {
          if (!can_twist(g, p, t)) continue;
          const Matching pt = twist(g, p, t);
          CHECK(w + omega(g, t, ps, 1) == omega(g, t, p, 1) + omega(g, s, pt, 1));
        }
      }
    }
  }
}

TEST_CASE("arcs crossing each arc at most once have zero valuation") {
  for (int n : {5, 6, 7, 8}) {
    for (const CrossingSequence& gamma : enumerate_arcs(polygon_fan(n), n)) {
      const SnakeGraph g = SnakeGraph::build(polygon_fan(n), gamma);
      for (const Matching& p : enumerate_matchings(g))
        for (int s = 0; s < g.size(); ++s)
          if (can_twist(g, p, s)) CHECK(omega(g, s, p, 2) == 0);
      for (std::int64_t v : compute_valuation(g, 1).values) CHECK(v == 0);
    }
  }
}

TEST_CASE("one tile has zero valuation") {
  const SnakeGraph g = SnakeGraph::build(polygon_fan(4), {{0}, 0, 1, std::nullopt});
  const ValuationMap v = compute_valuation(g, 1);
  CHECK(v.values == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("golden valuation multiset") {
  const SnakeGraph g = SnakeGraph::build(annulus(), kGolden);
  const ValuationMap v = compute_valuation(g, 1);
  std::multiset<std::int64_t> got(v.values.begin(), v.values.end());
  CHECK(got == std::multiset<std::int64_t>{0, 2, -1, -2, 0, 0, 0, 2, 1, -2, 0, 1, -1});
  CHECK(v.at(maximal_matching(g)) == 0);
  CHECK(v.at(minimal_matching(g)) == 0);
  CHECK_THROWS_AS(v.at(Matching{std::vector<bool>(g.num_edges(), false)}), ValuationError);
}

TEST_CASE("both readings of edge order agree on the golden example") {
  const SnakeGraph g = SnakeGraph::build(annulus(), kGolden);
  const ValuationMap a = compute_valuation(g, 1);
  const ValuationMap b = compute_valuation(g, 1, {EdgeOrder::FirstIncidence, false});
  CHECK(a.values == b.values);
}

TEST_CASE("valuation satisfies every twist relation and vanishes at both ends") {
  for (const SnakeGraph& g : corpus_graphs(8)) {
    for (std::int64_t d : {1, 2}) {
      const TwistGraph tg = twist_graph(g);
      const ValuationMap v = compute_valuation(g, tg, d);
      CHECK(v.at(maximal_matching(g)) == 0);
      CHECK(v.at(minimal_matching(g)) == 0);
      for (std::size_t i = 0; i < tg.vertices.size(); ++i) {
        const Matching& p = tg.vertices[i];
        for (const auto& [tile, j] : tg.adjacency[i])
          CHECK(v.at(p) - v.at(tg.vertices[j]) == omega(g, tile, p, d));
      }
      for (std::int64_t x : v.values) CHECK(x % d == 0);
      CHECK(compute_valuation(g, tg, d, {EdgeOrder::TileMajor, true}).values == v.values);
    }
  }
}
