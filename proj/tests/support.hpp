#pragma once

// Shared test helpers: catalog access and brute-force oracles that do not go
// through the library's BFS tables, tuple encoding or Smith forms.

#include <algorithm>
#include <complex>
#include <cmath>
#include <bit>
#include <filesystem>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "orbcoh/io.hpp"

namespace testing {

using namespace orbcoh;

inline std::filesystem::path catalog(const std::string& name) {
  return std::filesystem::path(ORBCOH_CATALOG_DIR) / name;
}

inline group::FiniteMatrixGroup load(const std::string& name) { return io::load_group(catalog(name)); }

inline const std::vector<std::string>& linear_catalog() {
  static const std::vector<std::string> names{"trivial.json", "z2_c2.json", "z3_sl2.json", "z4_sl2.json",
                                              "z5_sl2.json",  "z6_sl2.json", "z3_sl3.json", "q8.json",
                                              "bd12.json",    "s3.json",     "s4.json"};
  return names;
}

using Complex = std::complex<double>;

/// Numerical image of a cyclotomic number under zeta_N -> exp(2 pi i / N).
inline Complex evaluate(const cyclo::CycNum& x) {
  const double n = x.conductor();
  Complex acc = 0;
  for (std::size_t k = 0; k < x.coeffs().size(); ++k)
    acc += x.coeffs()[k].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
  return acc;
}

/// Closure by repeatedly multiplying every known element by every known
/// element, deduplicated by linear scan.
inline std::vector<cyclo::CycMatrix> naive_closure(const std::vector<cyclo::CycMatrix>& gens, std::size_t n,
                                                   const cyclo::FieldPtr& field) {
  std::vector<cyclo::CycMatrix> elems{cyclo::CycMatrix::identity(field, n)};
  for (const auto& g : gens) elems.push_back(g);
  bool grew = true;
  auto contains = [&](const cyclo::CycMatrix& m) {
    for (const auto& e : elems)
      if (e == m) return true;
    return false;
  };
  std::vector<cyclo::CycMatrix> unique;
  for (const auto& e : elems)
    if (std::find(unique.begin(), unique.end(), e) == unique.end()) unique.push_back(e);
  elems = unique;
  while (grew) {
    grew = false;
    const auto snapshot = elems;
    for (const auto& a : snapshot)
      for (const auto& b : snapshot) {
        auto p = a * b;
        if (!contains(p)) {
          elems.push_back(std::move(p));
          grew = true;
        }
      }
  }
  return elems;
}

/// Conjugacy class sizes by direct matrix conjugation, sorted ascending.
inline std::vector<std::size_t> naive_class_sizes(const std::vector<cyclo::CycMatrix>& elems) {
  std::vector<bool> done(elems.size(), false);
  std::vector<std::size_t> sizes;
  auto index_of = [&](const cyclo::CycMatrix& m) {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == m) return i;
    return elems.size();
  };
  std::vector<cyclo::CycMatrix> inverses;
  for (const auto& e : elems)
    for (const auto& f : elems)
      if ((e * f).is_identity()) {
        inverses.push_back(f);
        break;
      }
  for (std::size_t x = 0; x < elems.size(); ++x) {
    if (done[x]) continue;
    std::size_t count = 0;
    for (std::size_t g = 0; g < elems.size(); ++g) {
      const auto c = index_of(elems[g] * elems[x] * inverses[g]);
      if (!done[c]) {
        done[c] = true;
        ++count;
      }
    }
    sizes.push_back(count);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Fixed points of an integer matrix B-action on the torus, counted on the
/// grid (1/N)Z^d / Z^d with N = |det B| (valid when the fixed set is finite):
/// points with B x = 0 mod 1 that are also fixed by h.
inline long brute_force_isolated_fixed(const intmat::IntMatrix& a, const intmat::IntMatrix& h) {
  const std::size_t d = a.rows();
  intmat::IntMatrix b = a;
  for (std::size_t i = 0; i < d; ++i) b(i, i) -= 1;
  const long n = std::labs(intmat::determinant(b).get_si());
  std::vector<long> x(d, 0);
  long fixed = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      long bx = 0, hx = 0;
      for (std::size_t j = 0; j < d; ++j) {
        bx += b(i, j).get_si() * x[j];
        hx += h(i, j).get_si() * x[j];
      }
      ok = bx % n == 0 && (hx - x[i]) % n == 0;
    }
    if (ok) ++fixed;
    std::size_t pos = 0;
    while (pos < d && ++x[pos] == n) x[pos++] = 0;
    if (pos == d) break;
  }
  return fixed;
}

/// Eigenvalue multiplicities of a matrix of order dividing m from traces of
/// its powers: mult(zeta_m^j) = (1/m) sum_k tr(M^k) zeta_m^{-jk}.
inline std::vector<std::size_t> dft_multiplicities(const cyclo::CycMatrix& m, unsigned order) {
  std::vector<Complex> traces;
  auto power = cyclo::CycMatrix::identity(m.field(), m.rows());
  for (unsigned k = 0; k < order; ++k) {
    traces.push_back(evaluate(power.trace()));
    power = power * m;
  }
  std::vector<std::size_t> out;
  for (unsigned j = 0; j < order; ++j) {
    Complex acc = 0;
    for (unsigned k = 0; k < order; ++k)
      acc += traces[k] * std::polar(1.0, -2 * std::numbers::pi * static_cast<double>(j * k % order) / order);
    out.push_back(static_cast<std::size_t>(std::lround(acc.real() / order)));
  }
  return out;
}

/// Abelian group generated by diagonal matrices diag(zeta_N^{e_1}, ...).
inline group::FiniteMatrixGroup diagonal_group(unsigned conductor,
                                               const std::vector<std::vector<long long>>& exponents) {
  const auto field = cyclo::CycField::get(conductor);
  std::vector<cyclo::CycMatrix> gens;
  for (const auto& e : exponents) {
    cyclo::CycMatrix g(field, e.size(), e.size());
    for (std::size_t i = 0; i < e.size(); ++i) g(i, i) = cyclo::CycNum::zeta_power(field, e[i]);
    gens.push_back(g);
  }
  return group::FiniteMatrixGroup::generate(field, exponents.front().size(), gens);
}

/// Exact determinant by fraction-valued Gaussian elimination.
inline Rational rational_det(std::vector<std::vector<Rational>> m) {
  Rational det = 1;
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

/// tr(Lambda^k A) as the sum of the principal k x k minors.
inline Rational exterior_trace_by_minors(const intmat::IntMatrix& a, std::size_t k) {
  const std::size_t d = a.rows();
  Rational total = 0;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < d; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    std::vector<std::vector<Rational>> minor(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = Rational(a(idx[i], idx[j]));
    total += rational_det(minor);
  }
  return total;
}

/// Orbifold Betti numbers of T^{2n}/G computed without Smith forms, valid
/// when every nontrivial element has isolated fixed points: the untwisted
/// sector by averaging exterior traces, each twisted class by counting
/// centralizer orbits on its fixed grid points.
inline std::map<Rational, long> torus_isolated_oracle(const models::TorusModel& model) {
  const std::size_t d = model.real_dim;
  std::vector<intmat::IntMatrix> elems{intmat::IntMatrix::identity(d)};
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = elems;
    for (const auto& a : snapshot)
      for (const auto& g : model.generators) {
        auto p = a * g;
        if (std::find(elems.begin(), elems.end(), p) == elems.end()) {
          elems.push_back(std::move(p));
          grew = true;
        }
      }
  }
  const long order = static_cast<long>(elems.size());
  std::map<Rational, long> betti;
  for (std::size_t k = 0; k <= d; ++k) {
    Rational sum = 0;
    for (const auto& h : elems) sum += exterior_trace_by_minors(h, k);
    sum /= order;
    if (!is_integer(sum)) throw std::runtime_error("non-integral untwisted Betti number");
    if (sum != 0) betti[Rational(static_cast<long>(k))] += sum.get_num().get_si();
  }
  std::vector<bool> seen(elems.size(), false);
  seen[0] = true;
  auto index_of = [&](const intmat::IntMatrix& m) {
    return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), m) - elems.begin());
  };
  for (std::size_t x = 1; x < elems.size(); ++x) {
    if (seen[x]) continue;
    std::vector<intmat::IntMatrix> centralizer;
    for (const auto& h : elems) {
      if (h * elems[x] == elems[x] * h) centralizer.push_back(h);
      // Conjugates of x by h: mark the whole class.
      for (const auto& hinv : elems)
        if (h * hinv == intmat::IntMatrix::identity(d)) seen[index_of(h * elems[x] * hinv)] = true;
    }
    long fixed_sum = 0;
    for (const auto& h : centralizer) fixed_sum += brute_force_isolated_fixed(elems[x], h);
    const long orbits = fixed_sum / static_cast<long>(centralizer.size());
    const auto mult = dft_multiplicities(models::complex_form(elems[x]), 12);
    Rational iota = 0;
    for (unsigned j = 0; j < 12; ++j) iota += make_rational(static_cast<long>(j * mult[j]), 12);
    betti[2 * iota] += orbits;
  }
  return betti;
}

}  // namespace testing
