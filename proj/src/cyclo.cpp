#include "orbcoh/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "orbcoh/error.hpp"

namespace orbcoh::cyclo {

namespace {

// Exact division of integer polynomials, divisor monic.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {Integer(0)};
  IntPoly quot(num.size() - dn, Integer(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0)
      throw Error(ErrorKind::InternalInconsistency, "cyclotomic division left a remainder");
  return quot;
}

// Solves A x = b over Q for square nonsingular A (row-major, n x n).
std::vector<Rational> solve_rational(std::vector<Rational> a, std::vector<Rational> b, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::DivisionByZero, "singular multiplication matrix");
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[col * n + k]);
      std::swap(b[piv], b[col]);
    }
    const Rational inv = 1 / a[col * n + col];
    for (std::size_t k = col; k < n; ++k) a[col * n + k] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      const Rational f = a[r * n + col];
      for (std::size_t k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

IntPoly cyclotomic_polynomial(unsigned conductor) {
  if (conductor == 0) throw Error(ErrorKind::ValidationError, "conductor must be positive");
  IntPoly poly(conductor + 1, Integer(0));
  poly[0] = -1;
  poly[conductor] = 1;
  for (unsigned d = 1; d < conductor; ++d)
    if (conductor % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  return poly;
}

CycField::CycField(unsigned conductor) : conductor_(conductor), phi_(cyclotomic_polynomial(conductor)) {}

std::shared_ptr<const CycField> CycField::get(unsigned conductor) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const CycField>> registry;
  if (conductor == 0) throw Error(ErrorKind::ValidationError, "conductor must be positive");
  std::lock_guard lock(mutex);
  auto& slot = registry[conductor];
  if (!slot) slot = std::make_shared<const CycField>(conductor);
  return slot;
}

// ---------------------------------------------------------------------------
// CycNum

namespace {

// Reduces a coefficient list of arbitrary length mod the monic Phi_N.
std::vector<Rational> reduce(std::vector<Rational> c, const IntPoly& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = c.size(); i-- > d;) {
    if (c[i] == 0) continue;
    const Rational lead = c[i];
    for (std::size_t k = 0; k < d; ++k)
      if (phi[k] != 0) c[i - d + k] -= lead * phi[k];
  }
  c.resize(d, Rational(0));
  return c;
}

}  // namespace

CycNum::CycNum(FieldPtr field) : field_(std::move(field)), coeffs_(field_->degree(), Rational(0)) {}

CycNum::CycNum(FieldPtr field, const Rational& value) : CycNum(std::move(field)) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

CycNum::CycNum(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  for (auto& c : coeffs) c.canonicalize();
  coeffs_ = reduce(std::move(coeffs), field_->phi());
}

CycNum CycNum::zeta_power(FieldPtr field, long long k) {
  const long long n = field->conductor();
  const long long e = ((k % n) + n) % n;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
  c[static_cast<std::size_t>(e)] = 1;
  return CycNum(std::move(field), std::move(c));
}

bool CycNum::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> CycNum::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

void CycNum::require_same_field(const CycNum& other) const {
  if (field_->conductor() != other.field_->conductor())
    throw Error(ErrorKind::IncompatibleConductor,
                "operands live in Q(zeta_" + std::to_string(field_->conductor()) + ") and Q(zeta_" +
                    std::to_string(other.field_->conductor()) + ")");
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
  require_same_field(rhs);
  const std::size_t d = coeffs_.size();
  if (d == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (rhs.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = reduce(std::move(prod), field_->phi());
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(conductor()) + ")");
  const std::size_t d = coeffs_.size();
  if (d == 1) return CycNum(field_, 1 / coeffs_[0]);
  // Column k of the multiplication-by-this matrix is this * zeta^k.
  std::vector<Rational> a(d * d);
  CycNum col = *this;
  const CycNum z = zeta_power(field_, 1);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t r = 0; r < d; ++r) a[r * d + k] = col.coeffs_[r];
    col *= z;
  }
  std::vector<Rational> e(d, Rational(0));
  e[0] = 1;
  return CycNum(field_, solve_rational(std::move(a), std::move(e), d));
}

CycNum& CycNum::operator/=(const CycNum& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const CycNum& a, const CycNum& b) {
  return a.conductor() == b.conductor() && a.coeffs_ == b.coeffs_;
}

std::size_t CycNum::hash() const noexcept {
  std::size_t seed = field_->conductor();
  for (const auto& c : coeffs_) hash_combine(seed, hash_value(c));
  return seed;
}

CycNum embed(const CycNum& a, unsigned target_conductor) {
  const unsigned n = a.conductor();
  if (target_conductor == 0 || target_conductor % n != 0)
    throw Error(ErrorKind::IncompatibleConductor,
                std::to_string(n) + " does not divide " + std::to_string(target_conductor));
  const auto target = CycField::get(target_conductor);
  const unsigned step = target_conductor / n;
  std::vector<Rational> c(static_cast<std::size_t>(step) * a.coeffs().size(), Rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i * step] = a.coeffs()[i];
  return CycNum(target, std::move(c));
}

// ---------------------------------------------------------------------------
// CycMatrix

CycMatrix::CycMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, CycNum(field_)) {}

CycMatrix::CycMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<CycNum> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw Error(ErrorKind::ValidationError, "matrix entry count does not match its shape");
  for (const auto& e : entries_)
    if (e.conductor() != field_->conductor())
      throw Error(ErrorKind::IncompatibleConductor, "matrix entry outside the matrix field");
}

CycMatrix CycMatrix::identity(FieldPtr field, std::size_t n) {
  CycMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(field, Rational(1));
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorKind::ValidationError, "matrix shapes do not compose");
  CycMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const CycNum& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const CycNum& b = rhs(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::ValidationError, "matrix shapes differ");
  CycMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
  return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::ValidationError, "matrix shapes differ");
  CycMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
  return out;
}

CycMatrix CycMatrix::scaled(const CycNum& s) const {
  CycMatrix out = *this;
  for (auto& e : out.entries_) e *= s;
  return out;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

CycMatrix CycMatrix::power(unsigned long long k) const {
  CycMatrix result = identity(field_, rows_);
  CycMatrix base = *this;
  while (k > 0) {
    if (k & 1ULL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

CycNum CycMatrix::trace() const {
  CycNum t(field_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

CycNum CycMatrix::determinant() const {
  if (!is_square()) throw Error(ErrorKind::ValidationError, "determinant of a non-square matrix");
  CycMatrix a = *this;
  CycNum det(field_, Rational(1));
  const std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return CycNum(field_);
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(piv, k), a(col, k));
      det = -det;
    }
    det *= a(col, col);
    const CycNum inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const CycNum f = a(r, col) * inv;
      for (std::size_t k = col; k < n; ++k) a(r, k) -= f * a(col, k);
    }
  }
  return det;
}

bool CycMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto v = (*this)(i, j).as_rational();
      if (!v || *v != (i == j ? 1 : 0)) return false;
    }
  return true;
}

std::size_t CycMatrix::hash() const noexcept {
  std::size_t seed = rows_ * 131 + cols_;
  for (const auto& e : entries_) hash_combine(seed, e.hash());
  return seed;
}

CycMatrix embed(const CycMatrix& m, unsigned target_conductor) {
  std::vector<CycNum> entries;
  entries.reserve(m.entries().size());
  for (const auto& e : m.entries()) entries.push_back(embed(e, target_conductor));
  return CycMatrix(CycField::get(target_conductor), m.rows(), m.cols(), std::move(entries));
}

// ---------------------------------------------------------------------------
// Linear algebra

namespace {

struct Echelon {
  CycMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

Echelon row_reduce(CycMatrix a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(piv, k), a(row, k));
    const CycNum inv = a(row, col).inverse();
    for (std::size_t k = col; k < a.cols(); ++k) a(row, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const CycNum f = a(r, col);
      for (std::size_t k = col; k < a.cols(); ++k) a(r, k) -= f * a(row, k);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace

KernelBasis kernel_basis(const CycMatrix& m) {
  auto [red, pivots] = row_reduce(m);
  KernelBasis out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    CycVector v(m.cols(), CycNum(m.field()));
    v[free] = CycNum(m.field(), Rational(1));
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    out.basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const CycMatrix& m) { return row_reduce(m).pivot_cols.size(); }

CycMatrix from_columns(const FieldPtr& field, std::size_t n, const std::vector<CycVector>& columns) {
  CycMatrix out(field, n, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) out(r, c) = columns[c][r];
  return out;
}

std::vector<std::size_t> eigenvalue_multiplicities(const CycMatrix& m_mat, unsigned m) {
  if (!m_mat.is_square()) throw Error(ErrorKind::ValidationError, "eigenvalues of a non-square matrix");
  if (m == 0) throw Error(ErrorKind::NotFiniteOrder, "order must be positive");
  if (!m_mat.power(m).is_identity())
    throw Error(ErrorKind::NotFiniteOrder, "M^" + std::to_string(m) + " is not the identity");
  const unsigned big = std::lcm(m_mat.field()->conductor(), m);
  const auto field = CycField::get(big);
  const CycMatrix lifted = embed(m_mat, big);
  const std::size_t n = m_mat.rows();
  std::vector<std::size_t> mult(m, 0);
  std::size_t total = 0;
  for (unsigned j = 0; j < m && total < n; ++j) {
    const CycNum root = CycNum::zeta_power(field, static_cast<long long>(j) * (big / m));
    const CycMatrix shifted = lifted - CycMatrix::identity(field, n).scaled(root);
    mult[j] = n - rank(shifted);
    total += mult[j];
  }
  if (total != n)
    throw Error(ErrorKind::InternalInconsistency, "eigenvalue multiplicities do not sum to the dimension");
  return mult;
}

}  // namespace orbcoh::cyclo
