#pragma once

// Seeds of geometric type: extended exchange matrices, compatible skew
// forms, and their mutations.

#include "qcluster/laurent.hpp"

#include <stdexcept>
#include <vector>

namespace qcluster {

class CompatibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Returns d when Btilde^T Lambda = (d I | 0) with d > 0; otherwise throws
/// CompatibilityError naming the first offending entry.
std::int64_t check_compatible(const IntMatrix& btilde, const LambdaForm& lambda);

/// Matrix mutation in direction k (0-based, k < n), applied to all m rows.
IntMatrix mutate_B(const IntMatrix& btilde, int k);

/// Mutation of Lambda in direction k: column k becomes
/// Lambda(e_i, -e_k + sum_l [b_lk]_+ e_l), all other entries are kept.
LambdaForm mutate_Lambda(const LambdaForm& lambda, const IntMatrix& btilde, int k);

/// Tropical y-dynamics: y[j] is the exponent vector of y_j over the frozen
/// generators, and the semifield sum is the componentwise minimum.
std::vector<Exponent> mutate_tropical_y(const std::vector<Exponent>& y, const IntMatrix& b, int k);

/// The y-exponent vectors read off the coefficient rows of Btilde.
std::vector<Exponent> tropical_y_from_Btilde(const IntMatrix& btilde);

struct QuantumSeed {
  IntMatrix btilde;
  LambdaForm lambda;
  std::int64_t d = 0;

  /// Validates compatibility and records d.
  static QuantumSeed make(IntMatrix btilde, IntMatrix lambda);
  int n() const { return static_cast<int>(btilde.cols()); }
  int m() const { return static_cast<int>(btilde.rows()); }
  QuantumSeed mutate(int k) const;
};

/// [B; I]: principal coefficients.
IntMatrix principal_extension(const IntMatrix& b);
/// [[0, -I], [I, B^T]], compatible with [B; I] for skew-symmetric B, d = 1.
IntMatrix principal_lambda(const IntMatrix& b);
/// principal_lambda(B) shifted by a form in the kernel of [B; I]^T built from
/// a skew-symmetric n x n matrix S; still compatible with d = 1.
IntMatrix shifted_principal_lambda(const IntMatrix& b, const IntMatrix& s);

}  // namespace qcluster
