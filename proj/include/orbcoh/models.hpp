#pragma once

// Orbifold Betti / Hodge tables for point quotients, linear quotients C^n/G,
// torus quotients T^{2n}/G and two closed-form families.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbcoh/intmat.hpp"
#include "orbcoh/sectors.hpp"

namespace orbcoh::models {

using Degree = Rational;
using Bidegree = std::pair<Rational, Rational>;

struct SectorContribution {
  std::string label;
  Rational iota;
  std::map<Degree, long long> degrees;  // orbifold degree -> dimension
};

struct CohomologyTable {
  std::string model;
  std::size_t complex_dim = 0;           // degrees live in [0, 2 * complex_dim]
  std::map<Degree, long long> betti;
  std::map<Bidegree, long long> hodge;   // empty unless the model is bigraded
  std::vector<SectorContribution> sectors;
  std::vector<std::pair<std::string, long long>> parameters;  // echoed model data

  long long total() const;
  long long betti_at(const Degree& d) const;
  long long hodge_at(const Rational& p, const Rational& q) const;
};

/// "(1)" for the identity class, "(g<rep>)" otherwise.
std::string sector_label(group::Index representative);

CohomologyTable cohomology_point(const group::FiniteMatrixGroup& g);

CohomologyTable hodge_linear(const sectors::SectorAnalysis& analysis);

// -- torus quotients --------------------------------------------------------

inline constexpr std::size_t kComponentCap = 1000000;

/// T^{2n} = R^{2n}/Z^{2n} with complex structure J0 = [[0,-I],[I,0]] acted on
/// by unimodular integer matrices commuting with J0.
struct TorusModel {
  std::size_t real_dim = 0;
  std::vector<intmat::IntMatrix> generators;

  /// Throws ModelViolation on odd dimension, J0 non-commutation or det != +-1.
  void validate() const;
  std::size_t complex_dim() const noexcept { return real_dim / 2; }
};

/// n x n matrix P + iQ over Q(zeta_4) for A = [[P,-Q],[Q,P]].
cyclo::CycMatrix complex_form(const intmat::IntMatrix& a);

/// The integer matrix over Q viewed as a cyclotomic matrix of conductor 1.
cyclo::CycMatrix rational_form(const intmat::IntMatrix& a);

CohomologyTable betti_torus(const TorusModel& model, std::size_t closure_cap = group::kDefaultClosureCap,
                            std::size_t component_cap = kComponentCap);

// -- closed-form catalog ----------------------------------------------------

/// Borcea-Voisin threefold (E x S)/<tau x sigma> from Nikulin data (r, a, delta).
CohomologyTable catalog_bv(int r, int a, int delta);

/// Weighted projective line CP(d1, d2), gcd(d1, d2) = 1.
CohomologyTable catalog_wp(int d1, int d2);

}  // namespace orbcoh::models
