#include "orbcoh/models.hpp"

#include <numeric>
#include <string>

#include "orbcoh/error.hpp"

namespace orbcoh::models {

using group::FiniteMatrixGroup;
using group::Index;
using intmat::IntMatrix;
using intmat::RatMatrix;

long long CohomologyTable::total() const {
  long long t = 0;
  for (const auto& [d, v] : betti) t += v;
  return t;
}

long long CohomologyTable::betti_at(const Degree& d) const {
  auto it = betti.find(d);
  return it == betti.end() ? 0 : it->second;
}

long long CohomologyTable::hodge_at(const Rational& p, const Rational& q) const {
  auto it = hodge.find({p, q});
  return it == hodge.end() ? 0 : it->second;
}

std::string sector_label(Index representative) {
  return representative == 0 ? "(1)" : "(g" + std::to_string(representative) + ")";
}

CohomologyTable cohomology_point(const FiniteMatrixGroup& g) {
  CohomologyTable t;
  t.model = "point";
  t.complex_dim = 0;
  for (const auto& cls : g.conjugacy_classes()) {
    t.betti[Degree(0)] += 1;
    t.sectors.push_back({sector_label(cls.representative), Rational(0), {{Degree(0), 1}}});
  }
  return t;
}

CohomologyTable hodge_linear(const sectors::SectorAnalysis& analysis) {
  CohomologyTable t;
  t.model = "linear";
  t.complex_dim = analysis.dimension();
  for (const auto& s : analysis.sector_table()) {
    const Rational& p = s.iota;
    t.hodge[{p, p}] += 1;
    t.betti[Degree(2 * p)] += 1;
    t.sectors.push_back({sector_label(s.tuple_class.representative[0]), p, {{Degree(2 * p), 1}}});
  }
  return t;
}

// ---------------------------------------------------------------------------
// Torus quotients

namespace {

IntMatrix j0(std::size_t n) {
  IntMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = -1;
    j(n + i, i) = 1;
  }
  return j;
}

IntMatrix to_int_matrix(const cyclo::CycMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto v = m(r, c).as_rational();
      if (!v || !is_integer(*v)) throw Error(ErrorKind::ModelViolation, "torus group element is not integral");
      out(r, c) = v->get_num();
    }
  return out;
}

// Number of points of prod Z/d_i fixed by y -> H y (mod Z), counted on the
// torsion coordinates of the Smith basis. Coordinates with d_i = 1 are zero.
long long count_fixed_components(const IntMatrix& h, const std::vector<Integer>& factors) {
  std::vector<std::size_t> idx;
  std::vector<long long> d;
  long long big = 1;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i] > 1) {
      idx.push_back(i);
      d.push_back(factors[i].get_si());
      big = std::lcm(big, d.back());
    }
  const std::size_t m = idx.size();
  std::vector<long long> scale(m);
  for (std::size_t i = 0; i < m; ++i) scale[i] = big / d[i];
  std::vector<long long> hm(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Integer v = h(idx[i], idx[j]) % static_cast<long>(big);
      if (v < 0) v += static_cast<long>(big);
      hm[i * m + j] = v.get_si();
    }
  std::vector<long long> a(m, 0);
  long long fixed = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      long long acc = 0;
      for (std::size_t j = 0; j < m; ++j) acc = (acc + hm[i * m + j] * (a[j] * scale[j] % big)) % big;
      ok = ((acc - a[i] * scale[i]) % big + big) % big == 0;
    }
    if (ok) ++fixed;
    std::size_t pos = 0;
    while (pos < m && ++a[pos] == d[pos]) a[pos++] = 0;
    if (pos == m) break;
  }
  return fixed;
}

}  // namespace

void TorusModel::validate() const {
  if (real_dim == 0 || real_dim % 2 != 0)
    throw Error(ErrorKind::ModelViolation, "torus dimension must be even and positive");
  const IntMatrix j = j0(real_dim / 2);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& a = generators[i];
    const std::string where = "generator " + std::to_string(i);
    if (a.rows() != real_dim || a.cols() != real_dim)
      throw Error(ErrorKind::ModelViolation, where + " has the wrong shape");
    if (!(a * j == j * a)) throw Error(ErrorKind::ModelViolation, where + " does not commute with J0");
    const Integer det = intmat::determinant(a);
    if (det != 1 && det != -1) throw Error(ErrorKind::ModelViolation, where + " is not unimodular");
  }
}

cyclo::CycMatrix complex_form(const IntMatrix& a) {
  const std::size_t n = a.rows() / 2;
  const auto field = cyclo::CycField::get(4);
  const auto i_unit = cyclo::CycNum::zeta_power(field, 1);
  cyclo::CycMatrix out(field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out(r, c) = cyclo::CycNum(field, Rational(a(r, c))) + cyclo::CycNum(field, Rational(a(n + r, c))) * i_unit;
  return out;
}

cyclo::CycMatrix rational_form(const IntMatrix& a) {
  const auto field = cyclo::CycField::get(1);
  cyclo::CycMatrix out(field, a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = cyclo::CycNum(field, Rational(a(r, c)));
  return out;
}

CohomologyTable betti_torus(const TorusModel& model, std::size_t closure_cap, std::size_t component_cap) {
  model.validate();
  const std::size_t dim = model.real_dim;
  std::vector<cyclo::CycMatrix> gens;
  for (const auto& a : model.generators) gens.push_back(rational_form(a));
  const auto g = FiniteMatrixGroup::generate(cyclo::CycField::get(1), dim, gens, closure_cap);

  std::vector<IntMatrix> elems;
  for (const auto& e : g.elements()) elems.push_back(to_int_matrix(e));

  CohomologyTable table;
  table.model = "torus";
  table.complex_dim = model.complex_dim();
  for (std::size_t d = 0; d <= dim; ++d) table.betti[Degree(static_cast<long>(d))] = 0;

  struct Row {
    Rational iota;
    std::size_t size;
    Index rep;
    SectorContribution contribution;
  };
  std::vector<Row> rows;

  for (const auto& cls : g.conjugacy_classes()) {
    const Index rep = cls.representative;
    const Rational iota = sectors::age(complex_form(elems[rep]), g.element_order(rep));

    IntMatrix b = elems[rep];
    for (std::size_t i = 0; i < dim; ++i) b(i, i) -= 1;
    const auto snf = intmat::smith_normal_form(b);
    const std::size_t r = snf.invariant_factors.size();
    const std::size_t free_dim = dim - r;
    Integer components(1);
    for (const auto& f : snf.invariant_factors) components *= f;
    if (components > component_cap)
      throw Error(ErrorKind::EnumerationCapExceeded,
                  "fixed locus of " + sector_label(rep) + " has " + components.get_str() + " components");

    std::vector<Rational> sums(free_dim + 1, Rational(0));
    const auto cent = g.centralizer({rep});
    for (Index h : cent) {
      const IntMatrix hy = snf.v_inverse * elems[h] * snf.v;
      const long long fixed = count_fixed_components(hy, snf.invariant_factors);
      if (fixed == 0) continue;
      RatMatrix restricted(free_dim, free_dim);
      for (std::size_t i = 0; i < free_dim; ++i)
        for (std::size_t j = 0; j < free_dim; ++j) restricted(i, j) = Rational(hy(r + i, r + j));
      const auto traces = intmat::exterior_traces(restricted);
      for (std::size_t k = 0; k <= free_dim; ++k) sums[k] += traces[k] * static_cast<long>(fixed);
    }

    SectorContribution contrib{sector_label(rep), iota, {}};
    for (std::size_t k = 0; k <= free_dim; ++k) {
      Rational dimk = sums[k] / static_cast<long>(cent.size());
      dimk.canonicalize();
      if (!is_integer(dimk) || dimk < 0)
        throw Error(ErrorKind::InternalInconsistency, "invariant dimension " + to_string(dimk) + " in " +
                                                          sector_label(rep) + " is not a nonnegative integer");
      if (dimk == 0) continue;
      const Degree degree = Rational(static_cast<long>(k)) + 2 * iota;
      contrib.degrees[degree] += dimk.get_num().get_si();
    }
    rows.push_back({iota, cls.members.size(), rep, std::move(contrib)});
  }

  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.iota != b.iota) return a.iota < b.iota;
    if (a.size != b.size) return a.size < b.size;
    return a.rep < b.rep;
  });
  for (auto& row : rows) {
    for (const auto& [d, v] : row.contribution.degrees) table.betti[d] += v;
    table.sectors.push_back(std::move(row.contribution));
  }
  return table;
}

// ---------------------------------------------------------------------------
// Closed-form catalog

CohomologyTable catalog_bv(int r, int a, int delta) {
  const std::string triple =
      "(" + std::to_string(r) + "," + std::to_string(a) + "," + std::to_string(delta) + ")";
  if (delta != 0 && delta != 1) throw Error(ErrorKind::InvalidNikulinTriple, triple + ": delta must be 0 or 1");
  if (r - a < 0 || (r - a) % 2 != 0 || 22 - r - a < 0 || (22 - r - a) % 2 != 0)
    throw Error(ErrorKind::InvalidNikulinTriple, triple + ": r-a and 22-r-a must be even and nonnegative");
  if (r == 10 && (a == 10 || a == 8) && delta == 0)
    throw Error(ErrorKind::InvalidNikulinTriple, triple + " is not covered by the curve-plus-rational-curves formula");

  const long long genus = (22 - r - a) / 2;
  const long long rational_curves = (r - a) / 2;
  const long long h11 = 1 + r + 4 * (rational_curves + 1);
  const long long h21 = 1 + (20 - r) + 4 * genus;

  CohomologyTable t;
  t.model = "catalog-bv";
  t.complex_dim = 3;
  t.parameters = {{"r", r}, {"a", a}, {"delta", delta}, {"g", genus}, {"k", rational_curves}};
  // Hodge diamond of a Calabi-Yau threefold with h10 = h20 = 0.
  const long long diamond[4][4] = {
      {1, 0, 0, 1},
      {0, h11, h21, 0},
      {0, h21, h11, 0},
      {1, 0, 0, 1},
  };
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      t.hodge[{Rational(p), Rational(q)}] = diamond[p][q];
      t.betti[Degree(p + q)] += diamond[p][q];
    }
  t.sectors.push_back({"untwisted", Rational(0),
                       {{Degree(0), 1}, {Degree(2), 1 + r}, {Degree(3), 2 * (1 + (20 - r)) + 2},
                        {Degree(4), 1 + r}, {Degree(6), 1}}});
  // Four copies of the fixed surface, shifted by 2 * iota = 2.
  const long long h00 = rational_curves + 1;
  t.sectors.push_back({"twisted", Rational(1),
                       {{Degree(2), 4 * h00}, {Degree(3), 4 * 2 * genus}, {Degree(4), 4 * h00}}});
  return t;
}

namespace {

void require_coprime(int d1, int d2) {
  if (d1 < 1 || d2 < 1 || std::gcd(d1, d2) != 1)
    throw Error(ErrorKind::NotCoprime,
                "weights (" + std::to_string(d1) + "," + std::to_string(d2) + ") must be positive and coprime");
}

}  // namespace

CohomologyTable catalog_wp(int d1, int d2) {
  require_coprime(d1, d2);
  CohomologyTable t;
  t.model = "catalog-wp";
  t.complex_dim = 1;
  t.parameters = {{"d1", d1}, {"d2", d2}};
  t.betti[Degree(0)] = 1;
  t.betti[Degree(2)] = 1;
  t.sectors.push_back({"untwisted", Rational(0), {{Degree(0), 1}, {Degree(2), 1}}});
  for (int j = 1; j < d1; ++j) {
    const Degree d = make_rational(2 * j, d1);
    t.betti[d] += 1;
    t.sectors.push_back({"x[" + std::to_string(j) + "/" + std::to_string(d1) + "]", make_rational(j, d1), {{d, 1}}});
  }
  for (int i = 1; i < d2; ++i) {
    const Degree d = make_rational(2 * i, d2);
    t.betti[d] += 1;
    t.sectors.push_back({"y[" + std::to_string(i) + "/" + std::to_string(d2) + "]", make_rational(i, d2), {{d, 1}}});
  }
  return t;
}

}  // namespace orbcoh::models
