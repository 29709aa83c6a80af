// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>

using namespace qcluster;
using L = QuantumLaurent<Integer>;
using Q = QCoeff<Integer>;

namespace {

const CrossingSequence kGolden{{0, 1, 0, 1, 0}, 0, 1, std::nullopt};

Exponent vec(std::initializer_list<std::int64_t> xs) {
  Exponent e(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) e[i++] = x;
  return e;
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

bool criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) o.fail("took " + std::to_string(secs) + " s");
  std::cout << (o.ok ? "PASS" : "FAIL") << ' ' << id << ' ' << title << " (" << secs << " s)";
  if (!o.ok) std::cout << ": " << o.detail;
  std::cout << '\n';
  return o.ok;
}

void golden_expansion(Outcome& o) {
  const Triangulation t = annulus();
  const QuantumSeed seed = principal_seed(t);
  if (seed.d != 1) o.fail("principal quantization has d = " + std::to_string(seed.d));
  const Q one(1), half = Q::monomial(-1) + Q::monomial(1), full = Q::monomial(-2) + Q(1) + Q::monomial(2);
  L want(4);
  want.add_term(vec({1, -2, 0, 0}), one);
  want.add_term(vec({-3, 4, 3, 2}), one);
  want.add_term(vec({-3, -2, 0, 2}), one);
  want.add_term(vec({-1, 0, 1, 1}), half);
  want.add_term(vec({-1, -2, 0, 1}), half);
  want.add_term(vec({-3, 2, 2, 2}), full);
  want.add_term(vec({-3, 0, 1, 2}), full);
  const L got = quantum_expand(t, kGolden, seed).value;
  if (got.size() != 7) o.fail(std::to_string(got.size()) + " monomials");
  if (!(got == want)) o.fail("got " + got.to_string());
}

void matching_counts(Outcome& o) {
  const SnakeGraph golden = SnakeGraph::build(annulus(), kGolden);
  if (enumerate_matchings(golden).size() != 13) o.fail("golden graph has " + std::to_string(enumerate_matchings(golden).size()));
  if (count_matchings(golden) != 13) o.fail("golden count mismatch");
  if (qtest::brute_force_matchings(golden).size() != 13) o.fail("golden brute force mismatch");
  long a = 1, b = 2;  // F(0), F(1)
  for (int d = 1; d <= 8; ++d) {
    const SnakeGraph g = SnakeGraph::from_shape(std::vector<Glue>(d - 1, Glue::Right));
    const auto dp = enumerate_matchings(g);
    const auto brute = qtest::brute_force_matchings(g);
    if (count_matchings(g) != b || static_cast<long>(dp.size()) != b || !(dp == brute))
      o.fail("ladder with " + std::to_string(d) + " tiles");
    const long c = a + b;
    a = b;
    b = c;
  }
}

void valuation_well_defined(Outcome& o) {
  for (const auto& inst : qtest::acceptance_corpus(8)) {
    const SnakeGraph g = SnakeGraph::build(inst.t, inst.arc);
    const TwistGraph tg = twist_graph(g);
    const ValuationMap v = compute_valuation(g, tg, 1);
    if (v.at(maximal_matching(g)) != 0 || v.at(minimal_matching(g)) != 0) o.fail(inst.name + ": v(P_+-) != 0");
    for (std::size_t i = 0; i < tg.vertices.size(); ++i)
      for (const auto& [tile, j] : tg.adjacency[i])
        if (v.values[i] - v.values[j] != omega(g, tile, tg.vertices[i], 1)) o.fail(inst.name + ": twist relation");
    // Four-cycles of commuting twists sum to zero.
    for (const Matching& p : tg.vertices)
      for (int s = 0; s < g.size(); ++s)
        for (int t = s + 2; t < g.size(); ++t) {
          if (!can_twist(g, p, s) || !can_twist(g, p, t)) continue;
          const Matching ps = twist(g, p, s);
          const Matching pt = twist(g, p, t);
          const std::int64_t sum = omega(g, s, p, 1) + omega(g, t, ps, 1) - omega(g, s, pt, 1) - omega(g, t, p, 1);
          if (sum != 0) o.fail(inst.name + ": four-cycle sum " + std::to_string(sum));
        }
  }
}

void oracle_equivalence(Outcome& o) {
  std::vector<qtest::Instance> cases;
  for (int n : {5, 6}) {
    const Triangulation t = polygon_fan(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        if (!(i == 0 && j == n - 1)) cases.push_back({std::to_string(n) + "-gon", t, polygon_diagonal(n, i, j)});
  }
  if (cases.size() != 5 + 9) o.fail("polygon diagonal count");
  qtest::add_arcs(cases, "annulus", annulus(false), 5);
  qtest::add_arcs(cases, "mirrored annulus", annulus(true), 5);
  for (const auto& inst : cases) {
    for (const QuantumSeed& seed : qtest::lambda_choices(inst.t)) {
      if (inst.arc.arc) {
        const L own = quantum_expand(inst.t, inst.arc, seed).value;
        if (!(own == oracle_mutate_variables(seed, {})[*inst.arc.arc])) o.fail(inst.name + ": initial variable");
        continue;
      }
      const VerifyReport r = verify_against_oracle(inst.t, seed, flips_to_contain(inst.t, inst.arc), inst.arc);
      if (!r.ok) o.fail(inst.name + " " + qtest::describe(inst.arc) + ": " + r.message);
    }
  }
}

void specialization(Outcome& o) {
  for (const auto& inst : qtest::acceptance_corpus(8)) {
    const QuantumSeed seed = principal_seed(inst.t);
    if (!(specialize_q1(quantum_expand(inst.t, inst.arc, seed).value) ==
          commutative_expand(inst.t, inst.arc, seed.btilde)))
      o.fail(inst.name);
  }
}

void positivity(Outcome& o) {
  for (const auto& inst : qtest::acceptance_corpus(8))
    for (const QuantumSeed& seed : qtest::lambda_choices(inst.t))
      if (!quantum_expand(inst.t, inst.arc, seed).value.has_nonnegative_coefficients()) o.fail(inst.name);
}

void structural(Outcome& o) {
  std::mt19937 rng(20240611);
  for (const auto& inst : qtest::extended_corpus(6)) {
    const SnakeGraph g = SnakeGraph::build(inst.t, inst.arc);
    const auto ms = enumerate_matchings(g);

    for (int j = 0; j + 1 < g.size(); ++j) {
      const int a = g.edge_index(j + 1, g.glue()[j] == Glue::Right ? Side::West : Side::South);
      const auto [u, w] = g.edge_ends(a);
      auto incident = [&](int tile) {
        std::vector<int> out;
        for (Side s : kSides) {
          const int e = g.edge_index(tile, s);
          const auto [x, y] = g.edge_ends(e);
          if (e != a && (x == u || x == w || y == u || y == w)) out.push_back(e);
        }
        return out;
      };
      for (int b : incident(j))
        for (int c : incident(j + 1))
          for (const Matching& p : ms)
            if (p.contains(b) && p.contains(c)) o.fail(inst.name + ": edges beside a shared edge co-occur");
    }

    for (const Matching& p : ms)
      for (int s = 0; s < g.size(); ++s) {
        if (!can_twist(g, p, s)) continue;
        const Matching q = twist(g, p, s);
        if (!(twist(g, q, s) == p)) o.fail(inst.name + ": twist is not an involution");
        for (int t = s + 2; t < g.size(); ++t)
          if (can_twist(g, p, t) && !(twist(g, q, t) == twist(g, twist(g, p, t), s)))
            o.fail(inst.name + ": distant twists do not commute");
      }

    if (g.size() <= 6) {
      for (int tau = 0; tau < inst.t.n_internal(); ++tau) {
        const auto classes = tau_classes(g, tau);
        std::map<std::vector<int>, std::size_t> parts;
        for (const Matching& p : ms) {
          const auto nu = nu_signature(classes, p);
          if (!nu_in_range(classes, nu)) o.fail(inst.name + ": signature out of range");
          parts[nu] += 1;
        }
        std::size_t total = 0;
        for (const auto& kv : parts) total += kv.second;
        if (total != ms.size()) o.fail(inst.name + ": signature classes do not partition");
      }
    }

    Triangulation t = inst.t;
    QuantumSeed seed = qtest::lambda_choices(t)[rng() % 3];
    for (int step = 0; step < 6; ++step) {
      const int k = static_cast<int>(rng() % t.n_internal());
      const QuantumSeed next = seed.mutate(k);
      t = flip(t, k);
      if (!(signed_adjacency(t) == IntMatrix(next.btilde.topRows(t.n_internal()))))
        o.fail(inst.name + ": flip and matrix mutation disagree");
      if (next.d != seed.d || check_compatible(next.btilde, next.lambda) != seed.d)
        o.fail(inst.name + ": d changed under mutation");
      seed = next;
    }
  }
}

}  // namespace

int main() {
  bool ok = true;
  ok &= criterion(1, "golden annulus quantum expansion", 1.0, golden_expansion);
  ok &= criterion(2, "matching counts (golden 13, ladders Fibonacci, brute force)", 0, matching_counts);
  ok &= criterion(3, "valuation well-defined on polygons and annulus arcs", 10.0, valuation_well_defined);
  ok &= criterion(4, "expansion equals mutation oracle under two or more Lambda", 60.0, oracle_equivalence);
  ok &= criterion(5, "specialization at q = 1 equals commutative expansion", 0, specialization);
  ok &= criterion(6, "positivity of quantum coefficients", 0, positivity);
  ok &= criterion(7, "structural properties", 0, structural);
  return ok ? 0 : 1;
}
