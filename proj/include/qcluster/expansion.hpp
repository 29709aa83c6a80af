#pragma once

// Laurent expansions of cluster variables from perfect matchings, and an
// independent mutation oracle computing the same variables inside the
// initial quantum torus.

#include "qcluster/seeds.hpp"
#include "qcluster/snake_graph.hpp"
#include "qcluster/surface.hpp"
#include "qcluster/valuation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcluster {

/// a(P): internal coordinates weight - crossing; frozen coordinates the
/// coefficient rows applied to the height, minus their componentwise minimum
/// over all matchings (`frozen_floor`).
Exponent exponent_vector(const SnakeGraph& g, const Matching& p, const IntMatrix& btilde,
                         const Exponent& frozen_floor);
/// Componentwise minimum of the coefficient rows applied to all heights.
Exponent frozen_floor(const SnakeGraph& g, const std::vector<Matching>& matchings, const IntMatrix& btilde);

/// Throws CompatibilityError unless the top block of Btilde is the signed
/// adjacency matrix of t.
void check_seed_matches(const Triangulation& t, const IntMatrix& btilde);

/// Sum over perfect matchings of x^T(P), merged by exponent.
CommLaurent<Integer> commutative_expand(const Triangulation& t, const CrossingSequence& gamma,
                                        const IntMatrix& btilde);

struct AuditEntry {
  Matching matching;
  Exponent exponent;
  std::int64_t v = 0;
};

struct QuantumExpansion {
  QuantumLaurent<Integer> value;
  std::vector<AuditEntry> audit;
};

/// Sum over perfect matchings of q^{v(P)/2} X^{a(P)}.
QuantumExpansion quantum_expand(const Triangulation& t, const CrossingSequence& gamma, const QuantumSeed& seed,
                                const ValuationOptions& options = {});

/// Normalized monomial X(t)^a of a mutated seed, for a >= 0, written in the
/// initial torus from the current variables.
QuantumLaurent<Integer> normalized_power(const std::vector<QuantumLaurent<Integer>>& current,
                                         const LambdaForm& lambda_t, const Exponent& a, const LambdaForm& lambda0);

/// Cluster and frozen variables after the given mutations, each expressed in
/// the torus of seed0.  Throws AlgebraError if an exchange is not divisible.
std::vector<QuantumLaurent<Integer>> oracle_mutate_variables(const QuantumSeed& seed0, const std::vector<int>& flips);

struct VerifyReport {
  bool ok = false;
  int slot = -1;
  QuantumLaurent<Integer> expansion;
  QuantumLaurent<Integer> oracle;
  std::string message;
};

/// Compares quantum_expand(t0, gamma, seed0) with the oracle variable in the
/// slot of the last flip.  Throws SurfaceError if the flips do not bring
/// gamma into the triangulation.
VerifyReport verify_against_oracle(const Triangulation& t0, const QuantumSeed& seed0, const std::vector<int>& flips,
                                   const CrossingSequence& gamma);

}  // namespace qcluster
