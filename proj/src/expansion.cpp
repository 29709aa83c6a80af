#include "qcluster/expansion.hpp"

#include <sstream>

namespace qcluster {

namespace {

Exponent frozen_part(const SnakeGraph& g, const Matching& p, const IntMatrix& btilde) {
  const Eigen::Index n = btilde.cols();
  return btilde.bottomRows(btilde.rows() - n) * height_exponent(g, p);
}

}  // namespace

Exponent frozen_floor(const SnakeGraph& g, const std::vector<Matching>& matchings, const IntMatrix& btilde) {
  Exponent floor = frozen_part(g, matchings.front(), btilde);
  for (const Matching& p : matchings) floor = floor.cwiseMin(frozen_part(g, p, btilde));
  return floor;
}

Exponent exponent_vector(const SnakeGraph& g, const Matching& p, const IntMatrix& btilde,
                         const Exponent& frozen_floor) {
  const Eigen::Index n = btilde.cols(), m = btilde.rows();
  Exponent a(m);
  a.head(n) = weight_exponent(g, p) - crossing_exponent(g);
  a.tail(m - n) = frozen_part(g, p, btilde) - frozen_floor;
  return a;
}

void check_seed_matches(const Triangulation& t, const IntMatrix& btilde) {
  const IntMatrix b = signed_adjacency(t);
  if (btilde.cols() != b.cols() || btilde.rows() < b.rows() || btilde.topRows(b.rows()) != b)
    throw CompatibilityError("top block of Btilde differs from the signed adjacency matrix of the triangulation");
}

CommLaurent<Integer> commutative_expand(const Triangulation& t, const CrossingSequence& gamma,
                                        const IntMatrix& btilde) {
  check_seed_matches(t, btilde);
  const SnakeGraph g = SnakeGraph::build(t, gamma);
  const std::vector<Matching> matchings = enumerate_matchings(g);
  const Exponent floor = frozen_floor(g, matchings, btilde);
  CommLaurent<Integer> out;
  for (const Matching& p : matchings) add_term<Integer>(out, exponent_vector(g, p, btilde, floor), Integer(1));
  return out;
}

QuantumExpansion quantum_expand(const Triangulation& t, const CrossingSequence& gamma, const QuantumSeed& seed,
                                const ValuationOptions& options) {
  check_seed_matches(t, seed.btilde);
  const std::int64_t d = check_compatible(seed.btilde, seed.lambda);
  const SnakeGraph g = SnakeGraph::build(t, gamma);
  const ValuationMap v = compute_valuation(g, d, options);
  const Exponent floor = frozen_floor(g, v.matchings, seed.btilde);
  QuantumExpansion out{QuantumLaurent<Integer>(seed.m()), {}};
  for (std::size_t i = 0; i < v.matchings.size(); ++i) {
    AuditEntry entry{v.matchings[i], exponent_vector(g, v.matchings[i], seed.btilde, floor), v.values[i]};
    out.value.add_term(entry.exponent, QCoeff<Integer>::monomial(entry.v));
    out.audit.push_back(std::move(entry));
  }
  return out;
}

QuantumLaurent<Integer> normalized_power(const std::vector<QuantumLaurent<Integer>>& current,
                                         const LambdaForm& lambda_t, const Exponent& a, const LambdaForm& lambda0) {
  const Eigen::Index m = a.size();
  // X(t)^a = q^{-1/2 sum_{i<j} L_ij a_i a_j} X_1^{a_1} ... X_m^{a_m}
  std::int64_t shift = 0;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j) shift -= lambda_t.matrix()(i, j) * a[i] * a[j];
  QuantumLaurent<Integer> r = QuantumLaurent<Integer>::one(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (a[i] < 0) throw AlgebraError("normalized_power expects a non-negative exponent");
    for (std::int64_t p = 0; p < a[i]; ++p) r = qmul(r, current[i], lambda0);
  }
  return r.scaled(QCoeff<Integer>::monomial(shift));
}

std::vector<QuantumLaurent<Integer>> oracle_mutate_variables(const QuantumSeed& seed0, const std::vector<int>& flips) {
  check_compatible(seed0.btilde, seed0.lambda);
  const Eigen::Index m = seed0.m();
  std::vector<QuantumLaurent<Integer>> current;
  for (Eigen::Index i = 0; i < m; ++i) current.push_back(QuantumLaurent<Integer>::monomial(unit_exponent(m, i)));
  QuantumSeed seed = seed0;
  for (int k : flips) {
    if (k < 0 || k >= seed.n()) throw std::out_of_range("flip direction " + std::to_string(k) + " out of range");
    Exponent plus = Exponent::Zero(m), minus = Exponent::Zero(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const std::int64_t b = seed.btilde(i, k);
      plus[i] = b > 0 ? b : 0;
      minus[i] = b < 0 ? -b : 0;
    }
    const Exponent ek = unit_exponent(m, k);
    // X(t)^{-e_k + v} = q^{L(v, e_k)/2} X(t)^v X_k^{-1}
    QuantumLaurent<Integer> numerator =
        normalized_power(current, seed.lambda, plus, seed0.lambda)
            .scaled(QCoeff<Integer>::monomial(seed.lambda(plus, ek)));
    numerator += normalized_power(current, seed.lambda, minus, seed0.lambda)
                     .scaled(QCoeff<Integer>::monomial(seed.lambda(minus, ek)));
    current[k] = exact_right_divide(numerator, current[k], seed0.lambda);
    seed = seed.mutate(k);
  }
  return current;
}

VerifyReport verify_against_oracle(const Triangulation& t0, const QuantumSeed& seed0, const std::vector<int>& flips,
                                   const CrossingSequence& gamma) {
  VerifyReport report;
  Triangulation t = t0;
  CrossingSequence g = gamma;
  for (int k : flips) {
    g = rewrite_through_flip(t, g, k);
    t = flip(t, k);
  }
  if (!g.crossings.empty()) throw SurfaceError("the flips do not bring the arc into the triangulation");
  report.slot = *g.arc;
  if (!flips.empty() && report.slot != flips.back())
    throw SurfaceError("the arc ends in slot " + std::to_string(report.slot) + ", not in the last flipped slot");
  if (!t.is_internal(report.slot)) throw SurfaceError("the arc is a boundary arc");

  report.expansion = quantum_expand(t0, gamma, seed0).value;
  report.oracle = oracle_mutate_variables(seed0, flips)[report.slot];
  report.ok = report.expansion == report.oracle;
  if (report.ok) {
    report.message = "ok";
    return report;
  }
  std::ostringstream os;
  os << "mismatch in slot " << report.slot;
  const auto& a = report.expansion.terms();
  const auto& b = report.oracle.terms();
  for (auto ia = a.rbegin(), ib = b.rbegin();; ++ia, ++ib) {
    if (ia == a.rend() || ib == b.rend()) {
      const auto& rest = ia == a.rend() ? ib : ia;
      if (rest != (ia == a.rend() ? b.rend() : a.rend()))
        os << ": first differing exponent (" << exponent_to_string(rest->first) << ')';
      break;
    }
    if (ia->first != ib->first) {
      const bool a_first = LexLess{}(ib->first, ia->first);
      os << ": first differing exponent (" << exponent_to_string(a_first ? ia->first : ib->first) << ')';
      break;
    }
    if (!(ia->second == ib->second)) {
      os << ": coefficient of X^(" << exponent_to_string(ia->first) << ") is " << ia->second.to_string()
         << " in the expansion and " << ib->second.to_string() << " from the oracle";
      break;
    }
  }
  report.message = os.str();
  return report;
}

}  // namespace qcluster
