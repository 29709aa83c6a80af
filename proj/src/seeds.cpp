#include "qcluster/seeds.hpp"

#include <string>

namespace qcluster {

namespace {

std::int64_t pos(std::int64_t x) { return x > 0 ? x : 0; }

void check_direction(const IntMatrix& btilde, int k) {
  if (k < 0 || k >= btilde.cols())
    throw std::out_of_range("mutation direction " + std::to_string(k) + " out of range");
}

}  // namespace

std::int64_t check_compatible(const IntMatrix& btilde, const LambdaForm& lambda) {
  const Eigen::Index m = btilde.rows(), n = btilde.cols();
  if (lambda.dim() != m)
    throw CompatibilityError("Lambda is " + std::to_string(lambda.dim()) + "x" + std::to_string(lambda.dim()) +
                             " but Btilde has " + std::to_string(m) + " rows");
  if (n == 0 || n > m) throw CompatibilityError("Btilde must have 1 <= n <= m columns");
  const IntMatrix prod = btilde.transpose() * lambda.matrix();
  const std::int64_t d = prod(0, 0);
  if (d <= 0)
    throw CompatibilityError("(Btilde^T Lambda)[0][0] = " + std::to_string(d) +
                             ", expected a positive scalar d; a compatible Lambda exists only for full-rank Btilde");
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const std::int64_t want = i == j ? d : 0;
      if (prod(i, j) != want)
        throw CompatibilityError("(Btilde^T Lambda)[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "] = " + std::to_string(prod(i, j)) + ", expected " + std::to_string(want) +
                                 (i == j ? " (D must be scalar)" : ""));
    }
  }
  return d;
}

IntMatrix mutate_B(const IntMatrix& btilde, int k) {
  check_direction(btilde, k);
  IntMatrix r = btilde;
  for (Eigen::Index i = 0; i < btilde.rows(); ++i) {
    for (Eigen::Index j = 0; j < btilde.cols(); ++j) {
      if (i == k || j == k) {
        r(i, j) = -btilde(i, j);
      } else {
        const std::int64_t bik = btilde(i, k), bkj = btilde(k, j);
        r(i, j) = btilde(i, j) + pos(bik) * pos(bkj) - pos(-bik) * pos(-bkj);
      }
    }
  }
  return r;
}

LambdaForm mutate_Lambda(const LambdaForm& lambda, const IntMatrix& btilde, int k) {
  check_direction(btilde, k);
  const Eigen::Index m = lambda.dim();
  if (btilde.rows() != m) throw CompatibilityError("Lambda and Btilde sizes disagree");
  Exponent target = -unit_exponent(m, k);
  for (Eigen::Index l = 0; l < m; ++l) target[l] += pos(btilde(l, k));
  IntMatrix r = lambda.matrix();
  const Exponent column = lambda.matrix() * target;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (i == k) continue;
    r(i, k) = column[i];
    r(k, i) = -column[i];
  }
  r(k, k) = 0;
  return LambdaForm(r);
}

std::vector<Exponent> mutate_tropical_y(const std::vector<Exponent>& y, const IntMatrix& b, int k) {
  check_direction(b, k);
  if (static_cast<Eigen::Index>(y.size()) != b.cols()) throw std::invalid_argument("one y per column of B");
  std::vector<Exponent> r = y;
  const Exponent& yk = y[k];
  const Exponent one_plus_yk = yk.cwiseMin(0);
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (static_cast<int>(j) == k) {
      r[j] = -yk;
      continue;
    }
    const std::int64_t bkj = b(k, j);
    r[j] = y[j] + pos(bkj) * yk - bkj * one_plus_yk;
  }
  return r;
}

std::vector<Exponent> tropical_y_from_Btilde(const IntMatrix& btilde) {
  const Eigen::Index n = btilde.cols();
  std::vector<Exponent> y;
  for (Eigen::Index j = 0; j < n; ++j) y.emplace_back(btilde.col(j).tail(btilde.rows() - n));
  return y;
}

QuantumSeed QuantumSeed::make(IntMatrix btilde, IntMatrix lambda) {
  QuantumSeed s;
  s.btilde = std::move(btilde);
  try {
    s.lambda = LambdaForm(std::move(lambda));
  } catch (const AlgebraError& e) {
    throw CompatibilityError(e.what());
  }
  s.d = check_compatible(s.btilde, s.lambda);
  return s;
}

QuantumSeed QuantumSeed::mutate(int k) const {
  QuantumSeed s;
  s.lambda = mutate_Lambda(lambda, btilde, k);
  s.btilde = mutate_B(btilde, k);
  s.d = check_compatible(s.btilde, s.lambda);
  return s;
}

IntMatrix principal_extension(const IntMatrix& b) {
  const Eigen::Index n = b.rows();
  IntMatrix r(2 * n, n);
  r.topRows(n) = b;
  r.bottomRows(n) = IntMatrix::Identity(n, n);
  return r;
}

IntMatrix principal_lambda(const IntMatrix& b) {
  const Eigen::Index n = b.rows();
  IntMatrix r = IntMatrix::Zero(2 * n, 2 * n);
  r.topRightCorner(n, n) = -IntMatrix::Identity(n, n);
  r.bottomLeftCorner(n, n) = IntMatrix::Identity(n, n);
  r.bottomRightCorner(n, n) = b.transpose();
  return r;
}

IntMatrix shifted_principal_lambda(const IntMatrix& b, const IntMatrix& s) {
  const Eigen::Index n = b.rows();
  IntMatrix k(2 * n, 2 * n);
  k.topLeftCorner(n, n) = s;
  k.topRightCorner(n, n) = -s * b;
  k.bottomLeftCorner(n, n) = -b.transpose() * s;
  k.bottomRightCorner(n, n) = b.transpose() * s * b;
  return principal_lambda(b) + k;
}

}  // namespace qcluster
