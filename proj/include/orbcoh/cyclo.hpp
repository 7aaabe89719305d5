#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N) and linear algebra over them.
//
// A CycNum is stored in the power basis 1, zeta, ..., zeta^(d-1), d = deg Phi_N,
// always reduced mod Phi_N with canonical (lowest-terms) rational coordinates,
// so equality and hashing are coordinate-wise.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "orbcoh/rational.hpp"

namespace orbcoh::cyclo {

/// Integer polynomial, coefficient i multiplies x^i.
using IntPoly = std::vector<Integer>;

/// Phi_N by exact division of x^N - 1 by Phi_d over the proper divisors d of N.
IntPoly cyclotomic_polynomial(unsigned conductor);

class CycField {
 public:
  /// Interned per conductor; repeated calls return the same object.
  static std::shared_ptr<const CycField> get(unsigned conductor);

  unsigned conductor() const noexcept { return conductor_; }
  const IntPoly& phi() const noexcept { return phi_; }
  std::size_t degree() const noexcept { return phi_.size() - 1; }

  explicit CycField(unsigned conductor);

 private:
  unsigned conductor_;
  IntPoly phi_;
};

using FieldPtr = std::shared_ptr<const CycField>;

class CycNum {
 public:
  explicit CycNum(FieldPtr field);
  CycNum(FieldPtr field, const Rational& value);
  /// Coefficients of any length; reduced mod Phi_N.
  CycNum(FieldPtr field, std::vector<Rational> coeffs);

  /// zeta_N^k for any integer k.
  static CycNum zeta_power(FieldPtr field, long long k);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  unsigned conductor() const noexcept { return field_->conductor(); }

  bool is_zero() const noexcept;
  std::optional<Rational> as_rational() const;

  CycNum inverse() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  CycNum& operator/=(const CycNum& rhs);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  std::size_t hash() const noexcept;

 private:
  void require_same_field(const CycNum& other) const;

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

/// Image of a under zeta_N -> zeta_L^(L/N). Requires N | L.
CycNum embed(const CycNum& a, unsigned target_conductor);

class CycMatrix {
 public:
  CycMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  CycMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<CycNum> entries);

  static CycMatrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<CycNum>& entries() const noexcept { return entries_; }

  const CycNum& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  CycNum& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  CycMatrix operator*(const CycMatrix& rhs) const;
  CycMatrix operator+(const CycMatrix& rhs) const;
  CycMatrix operator-(const CycMatrix& rhs) const;
  CycMatrix scaled(const CycNum& s) const;
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);

  CycMatrix power(unsigned long long k) const;
  CycNum trace() const;
  CycNum determinant() const;
  bool is_identity() const;

  std::size_t hash() const noexcept;

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CycNum> entries_;
};

struct CycMatrixHash {
  std::size_t operator()(const CycMatrix& m) const noexcept { return m.hash(); }
};

CycMatrix embed(const CycMatrix& m, unsigned target_conductor);

using CycVector = std::vector<CycNum>;

struct KernelBasis {
  std::vector<CycVector> basis;  // reduced-echelon, one vector per free column
  std::size_t rank = 0;
};

/// Exact Gauss-Jordan elimination; rank + basis.size() == cols.
KernelBasis kernel_basis(const CycMatrix& m);

std::size_t rank(const CycMatrix& m);

/// Stacks column vectors (all of length n) into an n x k matrix.
CycMatrix from_columns(const FieldPtr& field, std::size_t n, const std::vector<CycVector>& columns);

/// Multiplicity of zeta_m^j among the eigenvalues of m_mat, j = 0..m-1,
/// computed as dim ker(M - zeta_m^j I) over Q(zeta_lcm(N, m)).
/// Throws NotFiniteOrder unless M^m = I.
std::vector<std::size_t> eigenvalue_multiplicities(const CycMatrix& m_mat, unsigned m);

}  // namespace orbcoh::cyclo
