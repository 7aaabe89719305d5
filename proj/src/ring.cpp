#include "orbcoh/ring.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "orbcoh/error.hpp"
#include "orbcoh/models.hpp"

namespace orbcoh::ring {

using group::FiniteMatrixGroup;
using group::Index;

const Vector& GradedRing::product(std::size_t i, std::size_t j) const {
  static const Vector empty;
  auto it = structure.find({i, j});
  return it == structure.end() ? empty : it->second;
}

Vector GradedRing::multiply(const Vector& a, const Vector& b) const {
  Vector out;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b)
      for (const auto& [k, c] : product(i, j)) out[k] += ca * cb * c;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

void GradedRing::add_term(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff) {
  auto& v = structure[{i, j}];
  v[k] += coeff;
  if (v[k] == 0) v.erase(k);
  if (v.empty()) structure.erase({i, j});
}

std::optional<std::size_t> GradedRing::find(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

namespace {

// Class positions ordered as sectors of a point quotient: (size, representative).
std::vector<std::size_t> point_basis(const FiniteMatrixGroup& g) {
  const auto& classes = g.conjugacy_classes();
  std::vector<std::size_t> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::make_tuple(classes[a].members.size(), classes[a].representative) <
           std::make_tuple(classes[b].members.size(), classes[b].representative);
  });
  return order;
}

GradedRing point_skeleton(const FiniteMatrixGroup& g, RingKind kind, std::vector<std::size_t>& basis_of_class) {
  const auto order = point_basis(g);
  GradedRing ring;
  ring.kind = kind;
  basis_of_class.assign(order.size(), 0);
  for (std::size_t b = 0; b < order.size(); ++b) {
    basis_of_class[order[b]] = b;
    ring.labels.push_back("x" + models::sector_label(g.conjugacy_classes()[order[b]].representative));
    ring.degrees.push_back(Rational(0));
  }
  ring.unit_index = basis_of_class[g.class_of(0)];
  return ring;
}

}  // namespace

GradedRing ring_point(const FiniteMatrixGroup& g) {
  std::vector<std::size_t> basis;
  GradedRing ring = point_skeleton(g, RingKind::Point, basis);
  const auto& classes = g.conjugacy_classes();
  for (const auto& pair : g.tuple_classes(2, false)) {
    const std::size_t a = basis[g.class_of(pair.representative[0])];
    const std::size_t b = basis[g.class_of(pair.representative[1])];
    const std::size_t c = g.class_of(pair.product_index);
    ring.add_term(a, b, basis[c],
                  make_rational(static_cast<long>(classes[c].centralizer_order),
                                static_cast<long>(pair.centralizer_order)));
  }
  PairingMatrix pairing(ring.size(), std::vector<Rational>(ring.size(), Rational(0)));
  for (std::size_t c = 0; c < classes.size(); ++c)
    pairing[basis[c]][basis[g.inverse_class(c)]] = make_rational(1, static_cast<long>(classes[c].centralizer_order));
  ring.pairing = std::move(pairing);
  return ring;
}

GradedRing center_oracle(const FiniteMatrixGroup& g) {
  std::vector<std::size_t> basis;
  GradedRing ring = point_skeleton(g, RingKind::CenterOracle, basis);
  const auto& classes = g.conjugacy_classes();
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = 0; b < classes.size(); ++b) {
      std::vector<long> hits(classes.size(), 0);
      for (Index h : classes[a].members)
        for (Index k : classes[b].members) ++hits[g.class_of(g.mul(h, k))];
      // Each element of a class appears equally often, so hits / |class| is
      // the coefficient of that class sum.
      for (std::size_t c = 0; c < classes.size(); ++c)
        if (hits[c] != 0)
          ring.add_term(basis[a], basis[b], basis[c],
                        make_rational(hits[c], static_cast<long>(classes[c].members.size())));
    }
  return ring;
}

GradedRing ring_linear(const sectors::SectorAnalysis& analysis) {
  const auto& g = analysis.group();
  if (!g.is_sl()) throw Error(ErrorKind::NotSL, "linear-quotient ring requires a group inside SL(n)");
  const auto table = analysis.sector_table();
  GradedRing ring;
  ring.kind = RingKind::Linear;
  std::vector<std::size_t> basis(table.size());
  for (std::size_t b = 0; b < table.size(); ++b) {
    basis[table[b].class_index] = b;
    ring.labels.push_back("x" + models::sector_label(table[b].tuple_class.representative[0]));
    ring.degrees.push_back(2 * table[b].iota);
  }
  ring.unit_index = basis[g.class_of(0)];
  const auto& classes = g.conjugacy_classes();
  for (const auto& pair : g.tuple_classes(2, false)) {
    const Index h1 = pair.representative[0];
    const Index h2 = pair.representative[1];
    const Index prod = pair.product_index;
    if (analysis.degree_shift(h1) + analysis.degree_shift(h2) != analysis.degree_shift(prod)) continue;
    if (analysis.fixed_subspace(pair.representative).dim != analysis.fixed_dim(prod)) continue;
    const std::size_t c = g.class_of(prod);
    ring.add_term(basis[g.class_of(h1)], basis[g.class_of(h2)], basis[c],
                  make_rational(static_cast<long>(classes[c].centralizer_order),
                                static_cast<long>(pair.centralizer_order)));
  }
  return ring;
}

GradedRing ring_wp(int d1, int d2) {
  if (d1 < 1 || d2 < 1 || std::gcd(d1, d2) != 1)
    throw Error(ErrorKind::NotCoprime,
                "weights (" + std::to_string(d1) + "," + std::to_string(d2) + ") must be positive and coprime");

  // Power basis entries: (generator, exponent), generator 0 = alpha, 1 = beta.
  struct Entry {
    std::string label;
    Rational degree;
    int gen;
    int power;
  };
  std::vector<Entry> entries{{"1", Rational(0), -1, 0}, {"t", Rational(2), -1, 0}};
  for (int j = 1; j < d1; ++j) entries.push_back({"a^" + std::to_string(j), make_rational(2 * j, d1), 0, j});
  for (int i = 1; i < d2; ++i) entries.push_back({"b^" + std::to_string(i), make_rational(2 * i, d2), 1, i});
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.degree < b.degree; });

  GradedRing ring;
  ring.kind = RingKind::WeightedProjective;
  for (const auto& e : entries) {
    ring.labels.push_back(e.label);
    ring.degrees.push_back(e.degree);
  }
  const std::size_t n = entries.size();
  const std::size_t unit = *ring.find("1");
  const std::size_t top = *ring.find("t");
  ring.unit_index = unit;
  auto index_of = [&](int gen, int power) -> std::optional<std::size_t> {
    const int full = gen == 0 ? d1 : d2;
    if (power == full) return top;
    if (power > full) return std::nullopt;
    return ring.find((gen == 0 ? "a^" : "b^") + std::to_string(power));
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == unit) {
        ring.add_term(i, j, j, Rational(1));
        continue;
      }
      if (j == unit) {
        ring.add_term(i, j, i, Rational(1));
        continue;
      }
      const auto& a = entries[i];
      const auto& b = entries[j];
      if (a.gen < 0 || b.gen < 0 || a.gen != b.gen) continue;  // t kills positive degree; alpha.beta = 0
      if (auto k = index_of(a.gen, a.power + b.power)) ring.add_term(i, j, *k, Rational(1));
    }

  PairingMatrix pairing(n, std::vector<Rational>(n, Rational(0)));
  pairing[unit][top] = 1;
  pairing[top][unit] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = entries[i];
      const auto& b = entries[j];
      if (a.gen >= 0 && a.gen == b.gen && a.power + b.power == (a.gen == 0 ? d1 : d2)) pairing[i][j] = 1;
    }
  ring.pairing = std::move(pairing);
  return ring;
}

const PairingMatrix& pairing_matrix(const GradedRing& ring) {
  if (!ring.pairing)
    throw Error(ErrorKind::PairingUndefined,
                "this ring pairs ordinary with compactly supported classes; no basis-by-basis pairing");
  return *ring.pairing;
}

Rational determinant(PairingMatrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::optional<std::string> compare_structure(const GradedRing& a, const GradedRing& b) {
  if (a.labels != b.labels) return std::string("basis labels differ");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.product(i, j) != b.product(i, j))
        return "products differ at " + a.labels[i] + " * " + a.labels[j];
  return std::nullopt;
}

namespace {

std::string render(const GradedRing& ring, const Vector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : v) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*" + ring.labels[k];
  }
  return out;
}

Rational pair(const GradedRing& ring, const Vector& a, const Vector& b) {
  Rational s(0);
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) s += ca * cb * (*ring.pairing)[i][j];
  return s;
}

}  // namespace

VerifyReport verify_ring(const GradedRing& ring) {
  VerifyReport report;
  const std::size_t n = ring.size();
  auto basis = [](std::size_t i) { return Vector{{i, Rational(1)}}; };
  auto name = [&](std::size_t i) { return ring.labels[i]; };

  for (std::size_t i = 0; i < n; ++i) {
    if (ring.product(ring.unit_index, i) != basis(i) || ring.product(i, ring.unit_index) != basis(i)) {
      report.unit = false;
      report.failures.push_back("unit fails on " + name(i));
    }
  }

  for (const auto& [ij, v] : ring.structure)
    for (const auto& [k, c] : v)
      if (c != 0 && ring.degrees[k] != ring.degrees[ij.first] + ring.degrees[ij.second]) {
        report.grading = false;
        report.failures.push_back("grading fails: " + name(ij.first) + " * " + name(ij.second) + " has a term in " +
                                  name(k));
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (ring.product(i, j) != ring.product(j, i)) {
        report.commutativity = false;
        report.failures.push_back("commutativity fails on (" + name(i) + ", " + name(j) + ")");
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& ij = ring.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector left = ring.multiply(ij, basis(k));
        const Vector right = ring.multiply(basis(i), ring.product(j, k));
        if (left != right) {
          report.associativity = false;
          report.failures.push_back("associativity fails at (" + name(i) + ", " + name(j) + ", " + name(k) +
                                    "): (ab)c = " + render(ring, left) + ", a(bc) = " + render(ring, right));
        }
      }
    }

  if (ring.pairing) {
    report.pairing_checked = true;
    if (determinant(*ring.pairing) == 0) {
      report.pairing = false;
      report.failures.push_back("pairing is degenerate");
    }
    const Vector unit = basis(ring.unit_index);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector& ij = ring.product(i, j);
        if (pair(ring, ij, unit) != (*ring.pairing)[i][j]) {
          report.pairing = false;
          report.failures.push_back("integral of " + name(i) + " * " + name(j) + " differs from their pairing");
        }
        for (std::size_t k = 0; k < n; ++k)
          if (pair(ring, ij, basis(k)) != pair(ring, basis(i), ring.product(j, k))) {
            report.pairing = false;
            report.failures.push_back("Frobenius identity fails at (" + name(i) + ", " + name(j) + ", " + name(k) +
                                      ")");
          }
      }
  }
  return report;
}

}  // namespace orbcoh::ring
