#pragma once

// Finite matrix groups, fully enumerated, with conjugacy data for elements
// and for k-tuples under simultaneous conjugation.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orbcoh/cyclo.hpp"

namespace orbcoh::group {

using cyclo::CycMatrix;
using cyclo::FieldPtr;
using Index = std::uint32_t;
using Tuple = std::vector<Index>;

inline constexpr std::size_t kDefaultClosureCap = 100000;
inline constexpr std::size_t kTupleEnumerationCap = 10000000;

struct ConjugacyClass {
  Index representative;          // least BFS index in the class
  std::vector<Index> members;    // ascending
  std::size_t centralizer_order;
};

struct TupleClass {
  std::size_t k;
  Tuple representative;          // lexicographically least member
  std::vector<Tuple> members;    // lexicographic order
  std::size_t centralizer_order;
  Index product_index;           // g_1 g_2 ... g_k of the representative
};

class FiniteMatrixGroup {
 public:
  /// Breadth-first closure of the generators. Element 0 is the identity, the
  /// rest follow in discovery order.
  static FiniteMatrixGroup generate(FieldPtr field, std::size_t n, const std::vector<CycMatrix>& generators,
                                    std::size_t cap = kDefaultClosureCap);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<CycMatrix>& elements() const noexcept { return elements_; }
  const CycMatrix& element(Index i) const { return elements_.at(i); }
  const std::vector<Index>& generators() const noexcept { return generators_; }

  Index mul(Index a, Index b) const { return mul_[static_cast<std::size_t>(a) * order() + b]; }
  Index inv(Index a) const { return inv_[a]; }
  Index conjugate(Index g, Index x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  Index product(const Tuple& t) const;

  unsigned element_order(Index a) const { return order_of_[a]; }
  unsigned exponent() const noexcept { return exponent_; }
  bool is_sl() const noexcept { return is_sl_; }
  bool is_abelian() const;

  /// Classes sorted by representative index.
  const std::vector<ConjugacyClass>& conjugacy_classes() const noexcept { return classes_; }
  /// Position in conjugacy_classes() of the class containing element a.
  std::size_t class_of(Index a) const { return class_of_[a]; }
  /// The involution (g) -> (g^-1) on class positions.
  std::size_t inverse_class(std::size_t c) const { return class_of(inv(classes_[c].representative)); }

  /// Elements commuting with every entry of the tuple (ascending).
  std::vector<Index> centralizer(const Tuple& t) const;

  /// Orbits of k-tuples under simultaneous conjugation, optionally restricted
  /// to tuples whose product is the identity. Throws EnumerationCapExceeded
  /// when |G|^k exceeds the cap.
  std::vector<TupleClass> tuple_classes(std::size_t k, bool product_one,
                                        std::size_t cap = kTupleEnumerationCap) const;

 private:
  FiniteMatrixGroup() = default;

  FieldPtr field_;
  std::size_t n_ = 0;
  std::vector<CycMatrix> elements_;
  std::vector<Index> mul_;
  std::vector<Index> inv_;
  std::vector<unsigned> order_of_;
  std::vector<Index> generators_;
  unsigned exponent_ = 1;
  bool is_sl_ = true;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

}  // namespace orbcoh::group
