#include "orbcoh/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "orbcoh/error.hpp"

namespace orbcoh::group {

FiniteMatrixGroup FiniteMatrixGroup::generate(FieldPtr field, std::size_t n, const std::vector<CycMatrix>& generators,
                                              std::size_t cap) {
  FiniteMatrixGroup g;
  g.field_ = field;
  g.n_ = n;
  const CycMatrix id = CycMatrix::identity(field, n);
  const cyclo::CycNum one(field, Rational(1));

  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& gen = generators[i];
    if (gen.rows() != n || gen.cols() != n)
      throw Error(ErrorKind::ValidationError, "generator " + std::to_string(i) + " is not " + std::to_string(n) +
                                                  "x" + std::to_string(n));
    if (gen.field()->conductor() != field->conductor())
      throw Error(ErrorKind::IncompatibleConductor, "generator " + std::to_string(i) + " has the wrong conductor");
    const auto det = gen.determinant();
    if (det.is_zero())
      throw Error(ErrorKind::NonInvertibleGenerator, "generator " + std::to_string(i) + " is singular");
    if (!(det == one)) g.is_sl_ = false;
  }

  // BFS closure under right multiplication by generators. parent/via record
  // the Cayley tree used below to fill the full table without further
  // matrix products.
  std::unordered_map<CycMatrix, Index, cyclo::CycMatrixHash> lookup;
  std::vector<Index> right;  // right[i * s + j] = index of e_i * gen_j
  std::vector<Index> parent{0};
  std::vector<std::size_t> via{0};
  const std::size_t s = generators.size();
  g.elements_.push_back(id);
  lookup.emplace(id, 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (std::size_t j = 0; j < s; ++j) {
      CycMatrix prod = g.elements_[head] * generators[j];
      auto it = lookup.find(prod);
      Index idx;
      if (it == lookup.end()) {
        if (g.elements_.size() >= cap)
          throw Error(ErrorKind::ClosureCapExceeded, "group closure exceeds " + std::to_string(cap) + " elements");
        idx = static_cast<Index>(g.elements_.size());
        lookup.emplace(prod, idx);
        g.elements_.push_back(std::move(prod));
        parent.push_back(static_cast<Index>(head));
        via.push_back(j);
      } else {
        idx = it->second;
      }
      right.push_back(idx);
    }
  }
  for (std::size_t j = 0; j < s; ++j) g.generators_.push_back(right[j]);

  const std::size_t order = g.elements_.size();
  g.mul_.assign(order * order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    g.mul_[a * order] = static_cast<Index>(a);
    for (std::size_t b = 1; b < order; ++b)
      g.mul_[a * order + b] = right[static_cast<std::size_t>(g.mul_[a * order + parent[b]]) * s + via[b]];
  }

  g.inv_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (g.mul_[a * order + b] == 0) {
        g.inv_[a] = static_cast<Index>(b);
        break;
      }

  g.order_of_.assign(order, 1);
  g.exponent_ = 1;
  for (std::size_t a = 0; a < order; ++a) {
    unsigned m = 1;
    for (Index p = static_cast<Index>(a); p != 0; p = g.mul(p, static_cast<Index>(a))) ++m;
    g.order_of_[a] = m;
    g.exponent_ = std::lcm(g.exponent_, m);
  }

  g.class_of_.assign(order, order);
  for (std::size_t a = 0; a < order; ++a) {
    if (g.class_of_[a] != order) continue;
    ConjugacyClass cls{static_cast<Index>(a), {}, 0};
    for (std::size_t h = 0; h < order; ++h) {
      const Index c = g.conjugate(static_cast<Index>(h), static_cast<Index>(a));
      if (g.class_of_[c] == order) {
        g.class_of_[c] = g.classes_.size();
        cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.centralizer_order = order / cls.members.size();
    g.classes_.push_back(std::move(cls));
  }
  return g;
}

Index FiniteMatrixGroup::product(const Tuple& t) const {
  Index p = 0;
  for (Index x : t) p = mul(p, x);
  return p;
}

bool FiniteMatrixGroup::is_abelian() const { return classes_.size() == order(); }

std::vector<Index> FiniteMatrixGroup::centralizer(const Tuple& t) const {
  std::vector<Index> out;
  for (std::size_t h = 0; h < order(); ++h) {
    const auto hi = static_cast<Index>(h);
    if (std::all_of(t.begin(), t.end(), [&](Index x) { return mul(hi, x) == mul(x, hi); })) out.push_back(hi);
  }
  return out;
}

std::vector<TupleClass> FiniteMatrixGroup::tuple_classes(std::size_t k, bool product_one, std::size_t cap) const {
  if (k == 0) throw Error(ErrorKind::ValidationError, "tuple arity must be at least 1");
  const std::size_t g = order();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > cap / g)
      throw Error(ErrorKind::EnumerationCapExceeded,
                  "|G|^k = " + std::to_string(g) + "^" + std::to_string(k) + " exceeds " + std::to_string(cap));
    total *= g;
  }

  // Tuples are encoded in mixed radix with the first component most
  // significant, so ascending codes are lexicographic order.
  auto decode = [&](std::size_t code) {
    Tuple t(k);
    for (std::size_t i = k; i-- > 0;) {
      t[i] = static_cast<Index>(code % g);
      code /= g;
    }
    return t;
  };
  auto encode = [&](const Tuple& t) {
    std::size_t code = 0;
    for (Index x : t) code = code * g + x;
    return code;
  };

  std::vector<bool> seen(total, false);
  std::vector<TupleClass> out;
  Tuple conj(k);
  for (std::size_t code = 0; code < total; ++code) {
    if (seen[code]) continue;
    const Tuple rep = decode(code);
    const Index prod = product(rep);
    if (product_one && prod != 0) {
      seen[code] = true;
      continue;
    }
    std::vector<std::size_t> orbit;
    for (std::size_t h = 0; h < g; ++h) {
      for (std::size_t i = 0; i < k; ++i) conj[i] = conjugate(static_cast<Index>(h), rep[i]);
      const std::size_t c = encode(conj);
      if (!seen[c]) {
        seen[c] = true;
        orbit.push_back(c);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    TupleClass tc{k, rep, {}, g / orbit.size(), prod};
    tc.members.reserve(orbit.size());
    for (auto c : orbit) tc.members.push_back(decode(c));
    out.push_back(std::move(tc));
  }
  return out;
}

}  // namespace orbcoh::group
