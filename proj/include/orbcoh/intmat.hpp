#pragma once

// Dense integer / rational matrices and the Smith normal form, used by the
// torus-quotient model.

#include <cstddef>
#include <vector>

#include "orbcoh/rational.hpp"

namespace orbcoh::intmat {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& rhs) const {
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if ((*this)(i, k) == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += (*this)(i, k) * rhs(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// U * B * V = D with U, V unimodular and D diagonal, nonzero invariant
/// factors first, each dividing the next. Only V and V^-1 are kept.
struct SmithForm {
  std::vector<Integer> invariant_factors;  // the nonzero diagonal entries, positive
  IntMatrix v;
  IntMatrix v_inverse;
};

SmithForm smith_normal_form(IntMatrix b);

Integer determinant(const IntMatrix& m);

/// Coefficients e_0..e_s of det(I + tR) = sum_k tr(Lambda^k R) t^k.
std::vector<Rational> exterior_traces(const RatMatrix& r);

}  // namespace orbcoh::intmat
