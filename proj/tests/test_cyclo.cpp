#include <numeric>
#include <random>

#include "doctest.h"
#include "orbcoh/cyclo.hpp"
#include "orbcoh/error.hpp"
#include "support.hpp"

using namespace orbcoh;
using namespace orbcoh::cyclo;

namespace {

// Phi_N as prod (x - w) over primitive N-th roots w, numerically.
std::vector<long> phi_numeric(unsigned n) {
  std::vector<testing::Complex> poly{1.0};
  for (unsigned k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    const auto w = std::polar(1.0, 2 * std::numbers::pi * k / n);
    std::vector<testing::Complex> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= w * poly[i];
    }
    poly = next;
  }
  std::vector<long> out;
  for (auto c : poly) out.push_back(std::lround(c.real()));
  return out;
}

std::vector<long> as_longs(const IntPoly& p) {
  std::vector<long> out;
  for (const auto& c : p) out.push_back(c.get_si());
  return out;
}

CycNum z(unsigned n, long long k = 1) { return CycNum::zeta_power(CycField::get(n), k); }
CycNum q(unsigned n, long p, long d = 1) { return CycNum(CycField::get(n), make_rational(p, d)); }

CycNum random_num(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < CycField::get(n)->degree(); ++i) c.push_back(make_rational(num(rng), den(rng)));
  return CycNum(CycField::get(n), c);
}

}  // namespace

TEST_SUITE("cyclo") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(as_longs(cyclotomic_polynomial(1)) == std::vector<long>{-1, 1});
    CHECK(as_longs(cyclotomic_polynomial(4)) == std::vector<long>{1, 0, 1});
    CHECK(as_longs(cyclotomic_polynomial(6)) == std::vector<long>{1, -1, 1});
    CHECK(as_longs(cyclotomic_polynomial(2)) == std::vector<long>{1, 1});
  }

  TEST_CASE("cyclotomic polynomials agree with the numeric root product") {
    for (unsigned n = 1; n <= 30; ++n) {
      CAPTURE(n);
      const auto phi = cyclotomic_polynomial(n);
      CHECK(as_longs(phi) == phi_numeric(n));
      CHECK(phi.back() == 1);
      unsigned totient = 0;
      for (unsigned k = 1; k <= n; ++k) totient += std::gcd(k, n) == 1;
      CHECK(phi.size() - 1 == totient);
      // Phi_N(zeta_N) = 0 in Q(zeta_N).
      CycNum value(CycField::get(n));
      for (std::size_t i = 0; i < phi.size(); ++i) value += CycNum(CycField::get(n), Rational(phi[i])) * z(n, i);
      CHECK(value.is_zero());
    }
  }

  TEST_CASE("arithmetic examples") {
    CHECK((q(3, 1) + z(3)) * z(3) == q(3, -1));
    CHECK(z(4).inverse() == -z(4));
    CHECK(z(3, 2) == q(3, -1) - z(3));
    CHECK(z(2) == q(2, -1));
    CHECK_THROWS_AS(q(5, 0).inverse(), Error);
    try {
      (void)(z(5) / q(5, 0));
      FAIL("division by zero accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
    try {
      (void)(z(3) + z(4));
      FAIL("mixed conductors accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IncompatibleConductor);
    }
  }

  TEST_CASE("canonical form makes equality coordinate-wise") {
    const auto field = CycField::get(3);
    const CycNum unreduced(field, {Rational(0), Rational(0), Rational(1)});  // x^2
    CHECK(unreduced.coeffs() == std::vector<Rational>{Rational(-1), Rational(-1)});
    const CycNum halves(field, {Rational(2, 4)});
    CHECK(halves.coeffs()[0].get_den() == 2);
    CHECK(halves.hash() == q(3, 1, 2).hash());
  }

  TEST_CASE("field operations match the complex embedding") {
    std::mt19937 rng(7);
    for (unsigned n : {3u, 4u, 5u, 7u, 8u, 9u, 12u, 15u}) {
      for (int trial = 0; trial < 25; ++trial) {
        const auto a = random_num(rng, n);
        const auto b = random_num(rng, n);
        CHECK(std::abs(testing::evaluate(a * b) - testing::evaluate(a) * testing::evaluate(b)) < 1e-9);
        CHECK(std::abs(testing::evaluate(a + b) - testing::evaluate(a) - testing::evaluate(b)) < 1e-9);
        CHECK((a + b) - b == a);
        if (!a.is_zero()) {
          CHECK(a * a.inverse() == q(n, 1));
          CHECK((b / a) * a == b);
        }
      }
    }
  }

  TEST_CASE("embed") {
    CHECK(embed(z(2), 4) == z(4, 2));
    CHECK(embed(q(1, 3, 2), 12) == q(12, 3, 2));
    CHECK(embed(z(3), 6) == z(6, 2));
    try {
      (void)embed(z(3), 4);
      FAIL("embedding into a non-multiple accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IncompatibleConductor);
    }
  }

  TEST_CASE("embed is a homomorphism and composes along divisor chains") {
    std::mt19937 rng(11);
    const std::vector<std::array<unsigned, 3>> chains{{1, 2, 4}, {3, 6, 12}, {2, 4, 8}, {5, 10, 20}, {3, 9, 18}};
    for (const auto& [n, l, k] : chains) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_num(rng, n);
        const auto b = random_num(rng, n);
        CHECK(embed(a * b, l) == embed(a, l) * embed(b, l));
        CHECK(embed(a + b, l) == embed(a, l) + embed(b, l));
        CHECK(embed(embed(a, l), k) == embed(a, k));
      }
    }
  }

  TEST_CASE("kernel basis examples") {
    const auto f3 = CycField::get(3);
    const auto f1 = CycField::get(1);
    CHECK(kernel_basis(CycMatrix::identity(f1, 3) - CycMatrix::identity(f1, 3)).basis.size() == 3);
    const auto minus = CycMatrix::identity(f1, 2).scaled(q(1, -1));
    CHECK(kernel_basis(minus - CycMatrix::identity(f1, 2)).basis.empty());
    CycMatrix d(f3, 2, 2);
    d(0, 0) = q(3, 1);
    d(1, 1) = z(3);
    const auto kb = kernel_basis(d - CycMatrix::identity(f3, 2));
    CHECK(kb.basis.size() == 1);
    CHECK(kb.rank == 1);
  }

  TEST_CASE("kernel vectors are annihilated and rank-nullity holds") {
    std::mt19937 rng(3);
    for (unsigned n : {1u, 3u, 4u, 5u}) {
      const auto field = CycField::get(n);
      for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        CycMatrix m(field, rows, cols);
        // Sparse entries and a duplicated row keep ranks low enough to be interesting.
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t c = 0; c < cols; ++c)
            if (rng() % 3 == 0) m(r, c) = random_num(rng, n);
        if (rows > 1)
          for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * z(n, 1);
        const auto kb = kernel_basis(m);
        CHECK(kb.rank + kb.basis.size() == cols);
        CHECK(kb.rank == rank(m));
        for (const auto& v : kb.basis) {
          const auto product = m * from_columns(field, cols, {v});
          for (const auto& e : product.entries()) CHECK(e.is_zero());
        }
      }
    }
  }

  TEST_CASE("eigenvalue multiplicities") {
    const auto f3 = CycField::get(3);
    CycMatrix d(f3, 2, 2);
    d(0, 0) = z(3);
    d(1, 1) = z(3, 2);
    CHECK(eigenvalue_multiplicities(d, 3) == std::vector<std::size_t>{0, 1, 1});
    const auto f1 = CycField::get(1);
    CHECK(eigenvalue_multiplicities(CycMatrix::identity(f1, 2).scaled(q(1, -1)), 2) ==
          std::vector<std::size_t>{0, 2});
    CHECK(eigenvalue_multiplicities(CycMatrix::identity(f1, 3), 1) == std::vector<std::size_t>{3});
    try {
      (void)eigenvalue_multiplicities(d, 2);
      FAIL("wrong order accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotFiniteOrder);
    }
    // A permutation matrix is not diagonal but has a rational form.
    CycMatrix cyc3(f1, 3, 3);
    cyc3(0, 2) = q(1, 1);
    cyc3(1, 0) = q(1, 1);
    cyc3(2, 1) = q(1, 1);
    CHECK(eigenvalue_multiplicities(cyc3, 3) == std::vector<std::size_t>{1, 1, 1});
  }

  TEST_CASE("determinant and power") {
    const auto f4 = CycField::get(4);
    CycMatrix m(f4, 2, 2);
    m(0, 1) = q(4, 1);
    m(1, 0) = q(4, -1);
    CHECK(m.determinant() == q(4, 1));
    CHECK(m.power(4).is_identity());
    CHECK(!m.power(2).is_identity());
    CHECK(CycMatrix(f4, 2, 2).determinant().is_zero());
  }
}
