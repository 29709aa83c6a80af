#pragma once

// Exact arithmetic for quantum tori.
//
// Coefficients live in Z[q^{+-1/2}]; we write s = q^{1/2} and store integer
// powers of s.  A QuantumLaurent is a finite sum of normalized monomials X^a,
// a in Z^m, multiplied through X^a X^b = q^{L(a,b)/2} X^{a+b}.

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcluster {

using Integer = boost::multiprecision::cpp_int;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using Exponent = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Raised when an algebraic precondition fails (length mismatch, inexact
/// division, non-skew form).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexicographic order on exponent vectors of equal length.
struct LexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
  }
};

inline Exponent unit_exponent(Eigen::Index dim, Eigen::Index i) {
  Exponent e = Exponent::Zero(dim);
  e[i] = 1;
  return e;
}

inline std::string exponent_to_string(const Exponent& a, const char* sep = ",") {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (i) os << sep;
    os << a[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// QCoeff: Laurent polynomial in s = q^{1/2}
// ---------------------------------------------------------------------------

template <class Scalar = Integer>
class QCoeff {
 public:
  using Terms = std::map<std::int64_t, Scalar>;

  QCoeff() = default;
  QCoeff(Scalar c) {  // NOLINT: implicit constant embedding is intended
    if (c != 0) terms_.emplace(0, std::move(c));
  }
  QCoeff(int c) : QCoeff(Scalar(c)) {}  // NOLINT

  static QCoeff monomial(std::int64_t s_exp, Scalar c = Scalar(1)) {
    QCoeff r;
    if (c != 0) r.terms_.emplace(s_exp, std::move(c));
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::int64_t lowest() const { return terms_.begin()->first; }
  std::int64_t highest() const { return terms_.rbegin()->first; }

  void add_term(std::int64_t s_exp, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(s_exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Multiply by s^e.
  QCoeff shifted(std::int64_t e) const {
    QCoeff r;
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k + e, c);
    return r;
  }

  /// Bar involution s -> s^{-1}.
  QCoeff bar() const {
    QCoeff r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(-k, c);
    return r;
  }

  Scalar at_one() const {
    Scalar sum = 0;
    for (const auto& kv : terms_) sum += kv.second;
    return sum;
  }

  bool has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.second >= 0; });
  }

  QCoeff& operator+=(const QCoeff& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  QCoeff& operator-=(const QCoeff& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend QCoeff operator+(QCoeff a, const QCoeff& b) { return a += b; }
  friend QCoeff operator-(QCoeff a, const QCoeff& b) { return a -= b; }
  friend QCoeff operator-(const QCoeff& a) { return QCoeff() - a; }
  friend QCoeff operator*(const QCoeff& a, const QCoeff& b) {
    QCoeff r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  friend bool operator==(const QCoeff& a, const QCoeff& b) { return a.terms_ == b.terms_; }

  /// Exact quotient a / b in Z[s^{+-1}], or nullopt if b does not divide a.
  friend std::optional<QCoeff> divide_exact(QCoeff a, const QCoeff& b) {
    if (b.is_zero()) throw AlgebraError("division by the zero coefficient");
    QCoeff q;
    if (a.is_zero()) return q;
    const std::int64_t floor = a.lowest() - b.lowest();
    const std::int64_t hb = b.highest();
    const Scalar& cb = b.terms_.rbegin()->second;
    while (!a.is_zero()) {
      const std::int64_t ha = a.highest();
      const Scalar ca = a.terms_.rbegin()->second;
      if (ha - hb < floor || ca % cb != 0) return std::nullopt;
      QCoeff t = monomial(ha - hb, ca / cb);
      a -= t * b;
      q += t;
    }
    return q;
  }

  /// Polynomial in q^{1/2}, ascending powers: "(q^-1 + 1 + q)".
  std::string to_string() const {
    if (terms_.empty()) return "(0)";
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const auto& [k, c] : terms_) {
      const bool neg = c < 0;
      const Scalar mag = neg ? Scalar(-c) : c;
      if (first) {
        if (neg) os << '-';
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      const std::string base = power_string(k);
      if (base.empty()) {
        os << mag;
      } else {
        if (mag != 1) os << mag << '*';
        os << base;
      }
    }
    os << ')';
    return os.str();
  }

 private:
  static std::string power_string(std::int64_t s_exp) {
    if (s_exp == 0) return "";
    if (s_exp == 2) return "q";
    if (s_exp % 2 == 0) return "q^" + std::to_string(s_exp / 2);
    return "q^(" + std::to_string(s_exp) + "/2)";
  }

  Terms terms_;
};

// ---------------------------------------------------------------------------
// LambdaForm
// ---------------------------------------------------------------------------

/// Skew-symmetric integer bilinear form L(a, b) = a^T L b.
class LambdaForm {
 public:
  LambdaForm() = default;
  explicit LambdaForm(IntMatrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols())
      throw AlgebraError("Lambda must be square");
    if (matrix_ != -matrix_.transpose())
      throw AlgebraError("Lambda must be skew-symmetric");
  }

  const IntMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

  std::int64_t operator()(const Exponent& a, const Exponent& b) const {
    return a.dot(matrix_ * b);
  }

  friend bool operator==(const LambdaForm& a, const LambdaForm& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  IntMatrix matrix_;
};

// ---------------------------------------------------------------------------
// QuantumLaurent
// ---------------------------------------------------------------------------

template <class Scalar = Integer>
class QuantumLaurent {
 public:
  using Coeff = QCoeff<Scalar>;
  using Terms = std::map<Exponent, Coeff, LexLess>;

  QuantumLaurent() = default;
  explicit QuantumLaurent(Eigen::Index dim) : dim_(dim) {}

  static QuantumLaurent monomial(const Exponent& a, Coeff c = Coeff(1)) {
    QuantumLaurent r(a.size());
    r.add_term(a, c);
    return r;
  }
  static QuantumLaurent one(Eigen::Index dim) { return monomial(Exponent::Zero(dim)); }

  Eigen::Index dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of X^a (zero if absent).
  Coeff coefficient(const Exponent& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add_term(const Exponent& a, const Coeff& c) {
    if (a.size() != dim_) throw AlgebraError("exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  QuantumLaurent& operator+=(const QuantumLaurent& o) {
    check_dim(o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  QuantumLaurent& operator-=(const QuantumLaurent& o) {
    check_dim(o);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
  }
  friend QuantumLaurent operator+(QuantumLaurent a, const QuantumLaurent& b) { return a += b; }
  friend QuantumLaurent operator-(QuantumLaurent a, const QuantumLaurent& b) { return a -= b; }

  /// Multiply every coefficient by a central element of Z[q^{+-1/2}].
  QuantumLaurent scaled(const Coeff& c) const {
    QuantumLaurent r(dim_);
    for (const auto& [a, x] : terms_) r.add_term(a, x * c);
    return r;
  }

  friend bool operator==(const QuantumLaurent& a, const QuantumLaurent& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  bool has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.second.has_nonnegative_coefficients(); });
  }

  /// Canonical text: terms lex-descending, "(q^-1 + 1 + q)·X^(-3,0,1,2)".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << it->second.to_string() << "·X^(" << exponent_to_string(it->first) << ')';
    }
    return os.str();
  }

  /// One line per term: exponent CSV, '|', then flattened (s-exponent, coefficient) pairs.
  std::string to_machine() const {
    std::ostringstream os;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      os << exponent_to_string(it->first) << '|';
      bool first = true;
      for (const auto& [k, c] : it->second.terms()) {
        if (!first) os << ',';
        first = false;
        os << k << ',' << c;
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  void check_dim(const QuantumLaurent& o) const {
    if (o.dim_ != dim_) throw AlgebraError("quantum Laurent length mismatch");
  }

  Eigen::Index dim_ = 0;
  Terms terms_;
};

/// Commutative Laurent polynomial with integer coefficients.
template <class Scalar = Integer>
using CommLaurent = std::map<Exponent, Scalar, LexLess>;

template <class Scalar>
void add_term(CommLaurent<Scalar>& p, const Exponent& a, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

template <class Scalar>
CommLaurent<Scalar> comm_mul(const CommLaurent<Scalar>& a, const CommLaurent<Scalar>& b) {
  CommLaurent<Scalar> r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_term<Scalar>(r, Exponent(ea + eb), ca * cb);
  return r;
}

template <class Scalar>
std::string comm_to_string(const CommLaurent<Scalar>& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second << "·x^(" << exponent_to_string(it->first) << ')';
  }
  return os.str();
}

/// Product in the quantum torus defined by `lambda`.
template <class Scalar>
QuantumLaurent<Scalar> qmul(const QuantumLaurent<Scalar>& a, const QuantumLaurent<Scalar>& b,
                            const LambdaForm& lambda) {
  if (a.dim() != b.dim() || a.dim() != lambda.dim())
    throw AlgebraError("qmul: length mismatch");
  QuantumLaurent<Scalar> r(a.dim());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
      r.add_term(Exponent(ea + eb), (ca * cb).shifted(lambda(ea, eb)));
  return r;
}

/// Evaluate at q = 1.
template <class Scalar>
CommLaurent<Scalar> specialize_q1(const QuantumLaurent<Scalar>& a) {
  CommLaurent<Scalar> r;
  for (const auto& [e, c] : a.terms()) add_term<Scalar>(r, e, c.at_one());
  return r;
}

/// Returns Q with qmul(Q, d, lambda) == n.  Leading-term elimination under the
/// lexicographic order; the per-coordinate support box of Q is known in
/// advance (the torus is a domain), which bounds the loop.
template <class Scalar>
QuantumLaurent<Scalar> exact_right_divide(QuantumLaurent<Scalar> n, const QuantumLaurent<Scalar>& d,
                                          const LambdaForm& lambda) {
  if (d.is_zero()) throw AlgebraError("division by zero");
  if (n.dim() != d.dim() || n.dim() != lambda.dim())
    throw AlgebraError("exact_right_divide: length mismatch");
  const Eigen::Index m = n.dim();
  QuantumLaurent<Scalar> q(m);
  if (n.is_zero()) return q;

  auto bounds = [m](const QuantumLaurent<Scalar>& p) {
    Exponent lo = p.terms().begin()->first, hi = lo;
    for (const auto& kv : p.terms()) {
      lo = lo.cwiseMin(kv.first);
      hi = hi.cwiseMax(kv.first);
    }
    (void)m;
    return std::pair{lo, hi};
  };
  const auto [n_lo, n_hi] = bounds(n);
  const auto [d_lo, d_hi] = bounds(d);
  const Exponent box_lo = n_lo - d_lo;
  const Exponent box_hi = n_hi - d_hi;
  if ((box_lo.array() > box_hi.array()).any()) throw AlgebraError("not divisible");

  const auto& [d_lead, d_coeff] = *d.terms().rbegin();
  while (!n.is_zero()) {
    const auto& [n_lead, n_coeff] = *n.terms().rbegin();
    const Exponent a = n_lead - d_lead;
    if ((a.array() < box_lo.array()).any() || (a.array() > box_hi.array()).any())
      throw AlgebraError("not divisible");
    // (c X^a) * (d_coeff X^b) = c d_coeff s^{L(a,b)} X^{a+b}
    auto c = divide_exact(n_coeff, d_coeff.shifted(lambda(a, d_lead)));
    if (!c) throw AlgebraError("not divisible");
    const QuantumLaurent<Scalar> t = QuantumLaurent<Scalar>::monomial(a, *c);
    n -= qmul(t, d, lambda);
    q += t;
  }
  return q;
}

}  // namespace qcluster
