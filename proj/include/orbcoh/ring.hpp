#pragma once

// Orbifold cup-product rings with exact structure constants: point quotients,
// SL linear quotients and weighted projective lines, plus the group-algebra
// centre used as an independent oracle and a ring-axiom verifier.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbcoh/sectors.hpp"

namespace orbcoh::ring {

enum class RingKind { Point, CenterOracle, Linear, WeightedProjective };

using Vector = std::map<std::size_t, Rational>;  // sparse, no zero entries
using PairingMatrix = std::vector<std::vector<Rational>>;

struct GradedRing {
  RingKind kind = RingKind::Point;
  std::vector<std::string> labels;
  std::vector<Rational> degrees;  // real cohomological degree
  std::map<std::pair<std::size_t, std::size_t>, Vector> structure;
  std::size_t unit_index = 0;
  std::optional<PairingMatrix> pairing;

  std::size_t size() const noexcept { return labels.size(); }

  /// e_i * e_j; empty when the product vanishes.
  const Vector& product(std::size_t i, std::size_t j) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  void add_term(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff);
  std::optional<std::size_t> find(const std::string& label) const;
};

/// Centre of C[G] in the class basis, via pair-conjugacy classes.
GradedRing ring_point(const group::FiniteMatrixGroup& g);

/// Class sums multiplied by exhaustive convolution in the group algebra.
GradedRing center_oracle(const group::FiniteMatrixGroup& g);

/// C^n / G for G in SL(n): products restricted to age-additive transverse pairs.
GradedRing ring_linear(const sectors::SectorAnalysis& analysis);

/// CP(d1, d2): alpha^j, beta^i with alpha^{d1} = beta^{d2} = t.
GradedRing ring_wp(int d1, int d2);

/// Throws PairingUndefined when the ring carries no basis-by-basis pairing.
const PairingMatrix& pairing_matrix(const GradedRing& ring);

Rational determinant(PairingMatrix m);

/// Empty when the two rings have identical basis labels and structure
/// constants; otherwise a description of the first difference.
std::optional<std::string> compare_structure(const GradedRing& a, const GradedRing& b);

struct VerifyReport {
  bool unit = true;
  bool associativity = true;
  bool grading = true;
  bool commutativity = true;
  bool pairing = true;
  bool pairing_checked = false;
  std::vector<std::string> failures;

  bool passed() const noexcept { return unit && associativity && grading && commutativity && pairing; }
};

VerifyReport verify_ring(const GradedRing& ring);

}  // namespace orbcoh::ring
