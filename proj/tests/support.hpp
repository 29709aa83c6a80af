#pragma once

// Shared fixtures for the test binaries: the instance corpus, independent
// reference computations, and small random generators with fixed seeds.

#include "qcluster/corpus.hpp"
#include "qcluster/expansion.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace qtest {

using namespace qcluster;

struct Instance {
  std::string name;
  Triangulation t;
  CrossingSequence arc;
};

inline std::string describe(const CrossingSequence& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.crossings.size(); ++i) s += (i ? "," : "") + std::to_string(g.crossings[i]);
  return s + "] from " + std::to_string(g.start_triangle);
}

/// A triangulation reached from `t` by `count` random flips.
inline Triangulation random_flips(Triangulation t, int count, std::mt19937& rng) {
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> pick(0, t.n_internal() - 1);
    t = flip(t, pick(rng));
  }
  return t;
}

inline void add_arcs(std::vector<Instance>& out, const std::string& name, const Triangulation& t, int max_crossings) {
  for (const CrossingSequence& g : enumerate_arcs(t, max_crossings)) out.push_back({name + " " + describe(g), t, g});
}

/// Polygons A_2..A_4 (pentagon, hexagon, heptagon) and annulus arcs with up
/// to `annulus_crossings` crossings.
inline std::vector<Instance> acceptance_corpus(int annulus_crossings = 8) {
  std::vector<Instance> out;
  for (int n : {5, 6, 7}) add_arcs(out, std::to_string(n) + "-gon", polygon_fan(n), n);
  add_arcs(out, "annulus", annulus(false), annulus_crossings);
  add_arcs(out, "mirrored annulus", annulus(true), annulus_crossings);
  return out;
}

/// The acceptance corpus plus zigzag annuli and randomly flipped
/// triangulations, all with arcs of at most `max_crossings` crossings.
inline std::vector<Instance> extended_corpus(int max_crossings = 6) {
  std::vector<Instance> out = acceptance_corpus(max_crossings);
  for (const char* pattern : {"OOI", "OII", "OOII", "OIOI", "OOOI"})
    add_arcs(out, std::string("zigzag ") + pattern, annulus_zigzag(pattern), max_crossings);
  std::mt19937 rng(20240611);
  for (int round = 0; round < 4; ++round) {
    add_arcs(out, "flipped 7-gon", random_flips(polygon_fan(7), 7, rng), max_crossings);
    add_arcs(out, "flipped OOII", random_flips(annulus_zigzag("OOII"), 5, rng), max_crossings);
  }
  return out;
}

/// All perfect matchings by testing every edge subset of the right size.
inline std::vector<Matching> brute_force_matchings(const SnakeGraph& g) {
  const int e = g.num_edges();
  const int k = g.num_vertices() / 2;
  std::vector<Matching> out;
  if (g.num_vertices() % 2 != 0 || e > 40) return out;
  if (k == 0) return out;
  // Gosper's hack over subsets of size k.
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < (std::uint64_t{1} << e);) {
    Matching p{std::vector<bool>(e, false)};
    for (int i = 0; i < e; ++i) p.bits[i] = (s >> i) & 1;
    if (is_perfect_matching(g, p)) out.push_back(p);
    const std::uint64_t c = s & -s;
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Tiles not reachable from the outer face without crossing an edge of the
/// symmetric difference of P and P_- (flood fill over the tile adjacency).
inline std::vector<bool> flood_enclosed(const SnakeGraph& g, const Matching& p) {
  const Matching base = minimal_matching(g);
  auto wall = [&](int e) { return p.contains(e) != base.contains(e); };
  const int d = g.size();
  std::vector<bool> reached(d, false);
  std::vector<int> todo;
  for (int j = 0; j < d; ++j) {
    for (Side s : kSides) {
      const int e = g.edge_index(j, s);
      if (!g.is_shared(e) && !wall(e) && !reached[j]) {
        reached[j] = true;
        todo.push_back(j);
      }
    }
  }
  while (!todo.empty()) {
    const int j = todo.back();
    todo.pop_back();
    for (int nb : {j - 1, j + 1}) {
      if (nb < 0 || nb >= d || reached[nb]) continue;
      const int shared = nb > j ? g.edge_index(nb, g.glue()[j] == Glue::Right ? Side::West : Side::South)
                                : g.edge_index(j, g.glue()[nb] == Glue::Right ? Side::West : Side::South);
      if (wall(shared)) continue;
      reached[nb] = true;
      todo.push_back(nb);
    }
  }
  std::vector<bool> enclosed(d);
  for (int j = 0; j < d; ++j) enclosed[j] = !reached[j];
  return enclosed;
}

/// Random skew-symmetric n x n matrix with entries in [-bound, bound].
inline IntMatrix random_skew(int n, int bound, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(-bound, bound);
  IntMatrix m = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = pick(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

inline QuantumLaurent<Integer> random_laurent(int dim, int terms, std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-2, 2), coeff(-3, 3), sexp(-3, 3);
  QuantumLaurent<Integer> r(dim);
  for (int t = 0; t < terms; ++t) {
    Exponent a(dim);
    for (int i = 0; i < dim; ++i) a[i] = exp(rng);
    r.add_term(a, QCoeff<Integer>::monomial(sexp(rng), Integer(coeff(rng))));
  }
  return r;
}

/// Compatible seeds for t used by the equivalence checks: principal, shifted
/// by a kernel form, and doubled (d = 2).
inline std::vector<QuantumSeed> lambda_choices(const Triangulation& t) {
  const IntMatrix b = signed_adjacency(t);
  const int n = static_cast<int>(b.rows());
  IntMatrix s = IntMatrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    s(i, i + 1) = 1;
    s(i + 1, i) = -1;
  }
  const IntMatrix bt = principal_extension(b);
  return {QuantumSeed::make(bt, principal_lambda(b)), QuantumSeed::make(bt, shifted_principal_lambda(b, s)),
          QuantumSeed::make(bt, 2 * principal_lambda(b))};
}

}  // namespace qtest
