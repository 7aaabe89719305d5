#pragma once

// Twisted sectors and multi-sectors of a linear action C^n / G, decorated with
// degree-shifting numbers (ages) and fixed-subspace data, plus the rank
// bookkeeping of obstruction and excess bundles.

#include <cstddef>
#include <vector>

#include "orbcoh/group.hpp"

namespace orbcoh::sectors {

using group::FiniteMatrixGroup;
using group::Index;
using group::Tuple;
using group::TupleClass;

/// Age of a finite-order matrix: sum of the exponents j/m over its eigenvalues
/// zeta_m^j, with m the order of the matrix.
Rational age(const cyclo::CycMatrix& m, unsigned order);

/// Eigenvalue exponents m_{i} in [0, order), ascending, one per dimension.
std::vector<unsigned> eigen_exponents(const cyclo::CycMatrix& m, unsigned order);

struct FixedSubspace {
  std::vector<cyclo::CycVector> basis;
  std::size_t dim = 0;
};

struct Sector {
  TupleClass tuple_class;        // k = 1
  std::size_t class_index;       // position in group.conjugacy_classes()
  Rational iota;
  std::size_t fixed_dim;
  std::size_t centralizer_order;
  bool is_untwisted;
};

struct MultiSector {
  TupleClass tuple_class;
  std::vector<Rational> iotas;
  std::size_t joint_fixed_dim;
  std::vector<std::size_t> evaluations;  // conjugacy-class position of each component
  std::size_t product_class;             // conjugacy-class position of the product
};

class SectorAnalysis {
 public:
  explicit SectorAnalysis(FiniteMatrixGroup group);

  const FiniteMatrixGroup& group() const noexcept { return group_; }
  std::size_t dimension() const noexcept { return group_.dimension(); }

  const Rational& degree_shift(Index g) const { return iota_.at(g); }
  const std::vector<unsigned>& exponents(Index g) const { return exponents_.at(g); }
  std::size_t fixed_dim(Index g) const { return fixed_.at(g).dim; }
  const FixedSubspace& fixed_subspace(Index g) const { return fixed_.at(g); }

  /// V^{g_1} ∩ ... ∩ V^{g_k}.
  FixedSubspace fixed_subspace(const Tuple& t) const;

  /// One sector per conjugacy class, sorted by (iota, class size, representative).
  std::vector<Sector> sector_table() const;

  std::vector<MultiSector> multi_sectors(std::size_t k, bool product_one) const;

  /// rank E = dim V^(g1,g2,g3) - n + sum iota for a product-one triple.
  std::size_t obstruction_rank(const Tuple& triple) const;

  /// rank nu = dim V^{g1 g2} - dim(V^{g1}∩V^{g2} + V^{g3}∩V^{g4}) for a
  /// product-one 4-tuple.
  std::size_t excess_rank(const Tuple& quad) const;

  /// dim V^{tuple} - n + sum iota over the tuple, for any product-one tuple.
  Rational joint_obstruction(const Tuple& t) const;

 private:
  void require_product_one(const Tuple& t, std::size_t arity) const;
  std::size_t sum_dim(const FixedSubspace& a, const FixedSubspace& b) const;

  FiniteMatrixGroup group_;
  std::vector<Rational> iota_;
  std::vector<std::vector<unsigned>> exponents_;
  std::vector<FixedSubspace> fixed_;
};

}  // namespace orbcoh::sectors
