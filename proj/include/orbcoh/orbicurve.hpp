#pragma once

// Rank-n orbifold bundles over a closed 2-orbifold, described by their
// classification tuple: genus, marked-point multiplicities with exponent
// vectors, and the rational first Chern number.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "orbcoh/sectors.hpp"

namespace orbcoh::orbicurve {

struct Mark {
  unsigned multiplicity = 2;        // m_i >= 2
  std::vector<unsigned> exponents;  // n entries, 0 <= m_ij < m_i
};

struct OrbiBundleData {
  unsigned genus = 0;
  unsigned rank = 1;
  std::vector<Mark> marks;
  Rational c;  // c_1(E)[Sigma]

  /// sum_i sum_j m_ij / m_i
  Rational exponent_sum() const;
};

struct Classification {
  bool valid = true;
  Integer desingularized_chern;  // c_1(|E|)[Sigma]
};

/// Throws ExponentRange or CongruenceViolation; ValidationError for shape errors.
Classification classify_validate(const OrbiBundleData& data);

/// n(1 - g) + c - sum m_ij / m_i, always an integer for valid data.
Integer euler_characteristic(const OrbiBundleData& data);

/// Genus-0 bundle attached to a product-one tuple of a linear action: one mark
/// per nontrivial component with that element's eigen-exponents, c = 0
/// (flat bundle), hence chi = n - sum iota.
OrbiBundleData sector_bundle_data(const sectors::SectorAnalysis& analysis, const group::Tuple& triple);

/// Same construction for a product-one tuple of any arity (used for the
/// glued four-pointed sphere).
OrbiBundleData tuple_bundle_data(const sectors::SectorAnalysis& analysis, const group::Tuple& tuple);

struct GlueReport {
  group::Index split;  // g = (g1 g2)^-1
  Integer index_first, index_second, index_glued;
  std::size_t split_fixed_dim;  // dim V^g
  Integer coker_first, coker_second, coker_glued;
  std::size_t excess_rank;
  bool index_identity = false;  // index1 + index2 = index_glued + dim V^g
  bool coker_identity = false;  // coker1 + coker2 + rank nu = coker_glued

  bool passed() const noexcept { return index_identity && coker_identity; }
};

GlueReport glue_index_check(const sectors::SectorAnalysis& analysis, const group::Tuple& quad);

/// Parses "m:e1,e2,...,en".
Mark parse_mark(std::string_view text);

}  // namespace orbcoh::orbicurve
