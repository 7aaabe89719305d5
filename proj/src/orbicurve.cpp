#include "orbcoh/orbicurve.hpp"

#include <charconv>
#include <string>

#include "orbcoh/error.hpp"

namespace orbcoh::orbicurve {

Rational OrbiBundleData::exponent_sum() const {
  Rational s(0);
  for (const auto& mk : marks)
    for (unsigned e : mk.exponents) s += make_rational(e, mk.multiplicity);
  return s;
}

Classification classify_validate(const OrbiBundleData& data) {
  if (data.rank == 0) throw Error(ErrorKind::ValidationError, "bundle rank must be positive");
  for (std::size_t i = 0; i < data.marks.size(); ++i) {
    const auto& mk = data.marks[i];
    const std::string where = "mark " + std::to_string(i);
    if (mk.multiplicity < 2) throw Error(ErrorKind::ValidationError, where + ": multiplicity must be at least 2");
    if (mk.exponents.size() != data.rank)
      throw Error(ErrorKind::ValidationError, where + ": expected " + std::to_string(data.rank) + " exponents");
    for (unsigned e : mk.exponents)
      if (e >= mk.multiplicity)
        throw Error(ErrorKind::ExponentRange,
                    where + ": exponent " + std::to_string(e) + " not in [0, " + std::to_string(mk.multiplicity) + ")");
  }
  const Rational desing = data.c - data.exponent_sum();
  if (!is_integer(desing))
    throw Error(ErrorKind::CongruenceViolation,
                "c = " + to_string(data.c) + " is not congruent to the exponent sum " + to_string(data.exponent_sum()) +
                    " mod Z");
  return {true, desing.get_num()};
}

Integer euler_characteristic(const OrbiBundleData& data) {
  const auto cls = classify_validate(data);
  return Integer(static_cast<long>(data.rank)) * (1 - static_cast<long>(data.genus)) + cls.desingularized_chern;
}

OrbiBundleData tuple_bundle_data(const sectors::SectorAnalysis& analysis, const group::Tuple& tuple) {
  const auto& g = analysis.group();
  for (auto x : tuple)
    if (x >= g.order()) throw Error(ErrorKind::ValidationError, "element index out of range");
  if (g.product(tuple) != 0) throw Error(ErrorKind::ProductNotIdentity, "tuple product is not the identity");
  OrbiBundleData data;
  data.genus = 0;
  data.rank = static_cast<unsigned>(analysis.dimension());
  // The bundle is uniformized by the trivial C^n with the linear G-action, so
  // it is flat: c_1(E) = 0 and c_1(|E|) = -sum iota.
  data.c = 0;
  for (auto x : tuple) {
    if (g.element_order(x) < 2) continue;
    data.marks.push_back({g.element_order(x), analysis.exponents(x)});
  }
  return data;
}

OrbiBundleData sector_bundle_data(const sectors::SectorAnalysis& analysis, const group::Tuple& triple) {
  if (triple.size() != 3) throw Error(ErrorKind::ValidationError, "expected a 3-tuple");
  return tuple_bundle_data(analysis, triple);
}

GlueReport glue_index_check(const sectors::SectorAnalysis& analysis, const group::Tuple& quad) {
  const auto& g = analysis.group();
  if (quad.size() != 4) throw Error(ErrorKind::ValidationError, "expected a 4-tuple");
  const auto glued_data = tuple_bundle_data(analysis, quad);

  GlueReport r;
  r.split = g.inv(g.mul(quad[0], quad[1]));
  const group::Tuple first{quad[0], quad[1], r.split};
  const group::Tuple second{g.inv(r.split), quad[2], quad[3]};
  r.index_first = euler_characteristic(sector_bundle_data(analysis, first));
  r.index_second = euler_characteristic(sector_bundle_data(analysis, second));
  r.index_glued = euler_characteristic(glued_data);
  r.split_fixed_dim = analysis.fixed_dim(r.split);

  // Holomorphic sections are the invariant constants, so dim ker = dim V^tuple.
  auto kernel = [&](const group::Tuple& t) { return Integer(static_cast<long>(analysis.fixed_subspace(t).dim)); };
  r.coker_first = kernel(first) - r.index_first;
  r.coker_second = kernel(second) - r.index_second;
  r.coker_glued = kernel(quad) - r.index_glued;
  r.excess_rank = analysis.excess_rank(quad);

  r.index_identity = r.index_first + r.index_second == r.index_glued + static_cast<long>(r.split_fixed_dim);
  r.coker_identity = r.coker_first + r.coker_second + static_cast<long>(r.excess_rank) == r.coker_glued;
  return r;
}

namespace {

unsigned parse_unsigned(std::string_view s, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::ParseError, "malformed mark \"" + std::string(whole) + "\"");
  return v;
}

}  // namespace

Mark parse_mark(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::ParseError, "mark \"" + std::string(text) + "\" needs m:e1,...");
  Mark mk;
  mk.multiplicity = parse_unsigned(text.substr(0, colon), text);
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    mk.exponents.push_back(parse_unsigned(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return mk;
}

}  // namespace orbcoh::orbicurve
