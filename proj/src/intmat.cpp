#include "orbcoh/intmat.hpp"

#include <utility>

#include "orbcoh/error.hpp"

namespace orbcoh::intmat {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct SmithWork {
  IntMatrix a;
  IntMatrix v;
  IntMatrix vinv;

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    for (std::size_t c = 0; c < vinv.cols(); ++c) std::swap(vinv(i, c), vinv(j, c));
  }
  // row_i -= q * row_t
  void add_row(std::size_t i, std::size_t t, const Integer& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= q * a(t, c);
  }
  // col_j -= q * col_t
  void add_col(std::size_t j, std::size_t t, const Integer& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) -= q * a(r, t);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, j) -= q * v(r, t);
    for (std::size_t c = 0; c < vinv.cols(); ++c) vinv(t, c) += q * vinv(j, c);
  }
};

}  // namespace

SmithForm smith_normal_form(IntMatrix b) {
  const std::size_t rows = b.rows();
  const std::size_t cols = b.cols();
  SmithWork w{std::move(b), IntMatrix::identity(cols), IntMatrix::identity(cols)};
  std::vector<Integer> factors;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool restart = true;
    while (restart) {
      restart = false;
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (w.a(i, j) != 0 && (pr == rows || abs(w.a(i, j)) < abs(w.a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return SmithForm{std::move(factors), std::move(w.v), std::move(w.vinv)};
      if (pr != t) w.swap_rows(pr, t);
      if (pc != t) w.swap_cols(pc, t);

      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.a(i, t) == 0) continue;
        w.add_row(i, t, floor_div(w.a(i, t), w.a(t, t)));
        if (w.a(i, t) != 0) restart = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.a(t, j) == 0) continue;
        w.add_col(j, t, floor_div(w.a(t, j), w.a(t, t)));
        if (w.a(t, j) != 0) restart = true;
      }
      if (restart) continue;
      for (std::size_t i = t + 1; i < rows && !restart; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (w.a(i, j) % w.a(t, t) != 0) {
            w.add_row(t, i, Integer(-1));
            restart = true;
            break;
          }
    }
    if (w.a(t, t) < 0)
      for (std::size_t c = 0; c < cols; ++c) w.a(t, c) = -w.a(t, c);
    factors.push_back(w.a(t, t));
  }
  return SmithForm{std::move(factors), std::move(w.v), std::move(w.vinv)};
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ValidationError, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return Integer(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      const Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det.get_num();
}

std::vector<Rational> exterior_traces(const RatMatrix& r) {
  // Faddeev-LeVerrier: det(xI - R) = sum_i c_i x^i, c_s = 1.
  const std::size_t s = r.rows();
  std::vector<Rational> c(s + 1, Rational(0));
  c[s] = 1;
  RatMatrix m(s, s);
  for (std::size_t k = 1; k <= s; ++k) {
    RatMatrix next = r * m;
    for (std::size_t i = 0; i < s; ++i) next(i, i) += c[s - k + 1];
    const RatMatrix rm = r * next;
    Rational tr(0);
    for (std::size_t i = 0; i < s; ++i) tr += rm(i, i);
    c[s - k] = -tr / static_cast<long>(k);
    m = std::move(next);
  }
  std::vector<Rational> e(s + 1);
  for (std::size_t k = 0; k <= s; ++k) e[k] = (k % 2 == 0) ? c[s - k] : Rational(-c[s - k]);
  return e;
}

}  // namespace orbcoh::intmat
