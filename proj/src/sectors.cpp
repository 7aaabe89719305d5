#include "orbcoh/sectors.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "orbcoh/error.hpp"

namespace orbcoh::sectors {

using cyclo::CycMatrix;

std::vector<unsigned> eigen_exponents(const CycMatrix& m, unsigned order) {
  const auto mult = cyclo::eigenvalue_multiplicities(m, order);
  std::vector<unsigned> out;
  for (unsigned j = 0; j < mult.size(); ++j) out.insert(out.end(), mult[j], j);
  return out;
}

Rational age(const CycMatrix& m, unsigned order) {
  Rational sum(0);
  for (unsigned e : eigen_exponents(m, order)) sum += make_rational(e, order);
  sum.canonicalize();
  return sum;
}

namespace {

FixedSubspace kernel_of_stack(const FiniteMatrixGroup& g, const Tuple& t) {
  const std::size_t n = g.dimension();
  const auto id = CycMatrix::identity(g.field(), n);
  CycMatrix stacked(g.field(), std::max<std::size_t>(t.size(), 1) * n, n);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const CycMatrix diff = g.element(t[i]) - id;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = diff(r, c);
  }
  auto kb = cyclo::kernel_basis(stacked);
  FixedSubspace out;
  out.dim = kb.basis.size();
  out.basis = std::move(kb.basis);
  return out;
}

}  // namespace

SectorAnalysis::SectorAnalysis(FiniteMatrixGroup group) : group_(std::move(group)) {
  const std::size_t order = group_.order();
  iota_.resize(order);
  exponents_.resize(order);
  fixed_.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    const auto idx = static_cast<Index>(i);
    exponents_[i] = eigen_exponents(group_.element(idx), group_.element_order(idx));
    Rational sum(0);
    for (unsigned e : exponents_[i]) sum += make_rational(e, group_.element_order(idx));
    sum.canonicalize();
    iota_[i] = sum;
    fixed_[i] = kernel_of_stack(group_, {idx});
  }
}

FixedSubspace SectorAnalysis::fixed_subspace(const Tuple& t) const {
  if (t.size() == 1) return fixed_.at(t[0]);
  return kernel_of_stack(group_, t);
}

std::vector<Sector> SectorAnalysis::sector_table() const {
  std::vector<Sector> out;
  const auto& classes = group_.conjugacy_classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& cls = classes[c];
    TupleClass tc{1, {cls.representative}, {}, cls.centralizer_order, cls.representative};
    for (Index m : cls.members) tc.members.push_back({m});
    out.push_back(Sector{std::move(tc), c, iota_[cls.representative], fixed_[cls.representative].dim,
                         cls.centralizer_order, cls.representative == 0});
  }
  std::stable_sort(out.begin(), out.end(), [](const Sector& a, const Sector& b) {
    return std::forward_as_tuple(a.iota, a.tuple_class.members.size(), a.tuple_class.representative[0]) <
           std::forward_as_tuple(b.iota, b.tuple_class.members.size(), b.tuple_class.representative[0]);
  });
  return out;
}

std::vector<MultiSector> SectorAnalysis::multi_sectors(std::size_t k, bool product_one) const {
  std::vector<MultiSector> out;
  for (auto& tc : group_.tuple_classes(k, product_one)) {
    MultiSector ms{tc, {}, fixed_subspace(tc.representative).dim, {}, group_.class_of(tc.product_index)};
    for (Index x : tc.representative) {
      ms.iotas.push_back(iota_[x]);
      ms.evaluations.push_back(group_.class_of(x));
    }
    out.push_back(std::move(ms));
  }
  return out;
}

void SectorAnalysis::require_product_one(const Tuple& t, std::size_t arity) const {
  if (t.size() != arity)
    throw Error(ErrorKind::ValidationError, "expected a " + std::to_string(arity) + "-tuple");
  for (Index x : t)
    if (x >= group_.order()) throw Error(ErrorKind::ValidationError, "element index out of range");
  if (group_.product(t) != 0) throw Error(ErrorKind::ProductNotIdentity, "tuple product is not the identity");
}

Rational SectorAnalysis::joint_obstruction(const Tuple& t) const {
  Rational r(static_cast<long>(fixed_subspace(t).dim) - static_cast<long>(dimension()));
  for (Index x : t) r += iota_[x];
  r.canonicalize();
  return r;
}

std::size_t SectorAnalysis::obstruction_rank(const Tuple& triple) const {
  require_product_one(triple, 3);
  const Rational r = joint_obstruction(triple);
  if (!is_integer(r) || r < 0)
    throw Error(ErrorKind::InternalInconsistency, "obstruction rank " + to_string(r) + " is not a nonnegative integer");
  return r.get_num().get_ui();
}

std::size_t SectorAnalysis::sum_dim(const FixedSubspace& a, const FixedSubspace& b) const {
  std::vector<cyclo::CycVector> cols = a.basis;
  cols.insert(cols.end(), b.basis.begin(), b.basis.end());
  if (cols.empty()) return 0;
  return cyclo::rank(cyclo::from_columns(group_.field(), dimension(), cols));
}

std::size_t SectorAnalysis::excess_rank(const Tuple& quad) const {
  require_product_one(quad, 4);
  const auto v12 = fixed_subspace(Tuple{quad[0], quad[1]});
  const auto v34 = fixed_subspace(Tuple{quad[2], quad[3]});
  const std::size_t target = fixed_.at(group_.mul(quad[0], quad[1])).dim;
  const std::size_t span = sum_dim(v12, v34);
  if (span > target) throw Error(ErrorKind::InternalInconsistency, "excess rank would be negative");
  return target - span;
}

}  // namespace orbcoh::sectors
