#include "doctest.h"
#include "orbcoh/error.hpp"
#include "orbcoh/group.hpp"
#include "support.hpp"

using namespace orbcoh;
using namespace orbcoh::group;
using cyclo::CycField;
using cyclo::CycMatrix;
using cyclo::CycNum;

namespace {

std::vector<std::size_t> class_sizes(const FiniteMatrixGroup& g) {
  std::vector<std::size_t> s;
  for (const auto& c : g.conjugacy_classes()) s.push_back(c.members.size());
  return s;
}

FiniteMatrixGroup cyclic(unsigned m) {
  const auto f = CycField::get(m);
  CycMatrix gen(f, 1, 1);
  gen(0, 0) = CycNum::zeta_power(f, 1);
  return FiniteMatrixGroup::generate(f, 1, {gen});
}

// Index of the transposition (1 2) inside the S3 catalog group.
Index find_element(const FiniteMatrixGroup& g, const std::vector<long>& flat) {
  for (Index i = 0; i < g.order(); ++i) {
    bool same = true;
    for (std::size_t k = 0; k < flat.size() && same; ++k)
      same = g.element(i).entries()[k] == CycNum(g.field(), Rational(flat[k]));
    if (same) return i;
  }
  throw std::runtime_error("element not found");
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("generate examples") {
    const auto z2 = testing::load("z2_c2.json");
    CHECK(z2.order() == 2);
    CHECK(z2.element(0).is_identity());

    const auto q8 = testing::load("q8.json");
    CHECK(q8.order() == 8);
    CHECK(q8.exponent() == 4);
    CHECK(q8.is_sl());

    const auto s3 = testing::load("s3.json");
    CHECK(s3.order() == 6);
    CHECK(!s3.is_sl());
  }

  TEST_CASE("BFS closure agrees with naive closure") {
    for (const auto& name : testing::linear_catalog()) {
      CAPTURE(name);
      const auto in = io::parse_group(io::read_json_file(testing::catalog(name)));
      const auto g = FiniteMatrixGroup::generate(in.field, in.dimension, in.generators);
      const auto naive = testing::naive_closure(in.generators, in.dimension, in.field);
      CHECK(g.order() == naive.size());
      for (const auto& e : naive) CHECK(std::find(g.elements().begin(), g.elements().end(), e) != g.elements().end());
      // The multiplication table matches matrix products.
      for (Index a = 0; a < g.order(); ++a)
        for (Index b = 0; b < g.order(); ++b) REQUIRE(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
    }
  }

  TEST_CASE("closure errors") {
    const auto f = CycField::get(1);
    CycMatrix shear(f, 2, 2);
    shear(0, 0) = CycNum(f, Rational(1));
    shear(0, 1) = CycNum(f, Rational(1));
    shear(1, 1) = CycNum(f, Rational(1));
    try {
      (void)FiniteMatrixGroup::generate(f, 2, {shear}, 50);
      FAIL("infinite group closed");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ClosureCapExceeded);
    }
    CycMatrix singular(f, 2, 2);
    singular(0, 0) = CycNum(f, Rational(1));
    try {
      (void)FiniteMatrixGroup::generate(f, 2, {singular});
      FAIL("singular generator accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonInvertibleGenerator);
    }
  }

  TEST_CASE("conjugacy class examples") {
    CHECK(class_sizes(cyclic(4)) == std::vector<std::size_t>{1, 1, 1, 1});
    auto s3 = class_sizes(testing::load("s3.json"));
    std::sort(s3.begin(), s3.end());
    CHECK(s3 == std::vector<std::size_t>{1, 2, 3});
    auto q8 = class_sizes(testing::load("q8.json"));
    std::sort(q8.begin(), q8.end());
    CHECK(q8 == std::vector<std::size_t>{1, 1, 2, 2, 2});
  }

  TEST_CASE("class structure invariants against naive conjugation") {
    for (const auto& name : testing::linear_catalog()) {
      CAPTURE(name);
      const auto g = testing::load(name);
      auto sizes = class_sizes(g);
      std::sort(sizes.begin(), sizes.end());
      CHECK(sizes == testing::naive_class_sizes(g.elements()));
      std::size_t total = 0;
      Index last_rep = 0;
      for (std::size_t c = 0; c < g.conjugacy_classes().size(); ++c) {
        const auto& cls = g.conjugacy_classes()[c];
        total += cls.members.size();
        CHECK(cls.members.size() * cls.centralizer_order == g.order());
        CHECK(cls.representative == cls.members.front());
        CHECK(g.centralizer({cls.representative}).size() == cls.centralizer_order);
        if (c > 0) CHECK(cls.representative > last_rep);
        last_rep = cls.representative;
        CHECK(g.inverse_class(g.inverse_class(c)) == c);
      }
      CHECK(total == g.order());
      for (Index a = 0; a < g.order(); ++a) {
        CHECK(g.order() % g.element_order(a) == 0);
        CHECK(g.element(a).power(g.element_order(a)).is_identity());
        CHECK(g.mul(a, g.inv(a)) == 0);
      }
    }
  }

  TEST_CASE("element orders") {
    CHECK(testing::load("z2_c2.json").element_order(0) == 1);
    CHECK(testing::load("z2_c2.json").element_order(1) == 2);
    const auto z6 = cyclic(6);
    CHECK(z6.element_order(z6.generators()[0]) == 6);
    CHECK(z6.exponent() == 6);
  }

  TEST_CASE("tuple classes") {
    const auto z2 = testing::load("z2_c2.json");
    const auto triples = z2.tuple_classes(3, true);
    REQUIRE(triples.size() == 4);
    CHECK(triples[0].representative == Tuple{0, 0, 0});
    CHECK(triples[1].representative == Tuple{0, 1, 1});
    CHECK(triples[2].representative == Tuple{1, 0, 1});
    CHECK(triples[3].representative == Tuple{1, 1, 0});

    const auto z6 = cyclic(6);
    const auto t6 = z6.tuple_classes(3, true);
    CHECK(t6.size() == 36);
    for (const auto& tc : t6) CHECK(tc.members.size() == 1);
  }

  TEST_CASE("S3 transposition pairs, brute force over matrices") {
    const auto s3 = testing::load("s3.json");
    // Transpositions are the elements of trace 1.
    std::vector<Index> transpositions;
    for (Index i = 0; i < s3.order(); ++i)
      if (s3.element(i).trace() == CycNum(s3.field(), Rational(1))) transpositions.push_back(i);
    REQUIRE(transpositions.size() == 3);
    std::vector<TupleClass> restricted;
    for (auto& tc : s3.tuple_classes(2, false)) {
      const bool a = std::count(transpositions.begin(), transpositions.end(), tc.representative[0]);
      const bool b = std::count(transpositions.begin(), transpositions.end(), tc.representative[1]);
      if (a && b) restricted.push_back(tc);
    }
    REQUIRE(restricted.size() == 2);
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (const auto& tc : restricted) shapes.emplace_back(tc.members.size(), tc.centralizer_order);
    std::sort(shapes.begin(), shapes.end());
    CHECK(shapes == std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {6, 1}});
  }

  TEST_CASE("tuple class invariants") {
    for (const auto& name : {"s3.json", "q8.json", "bd12.json", "z4_sl2.json"}) {
      CAPTURE(name);
      const auto g = testing::load(name);
      for (std::size_t k : {1, 2, 3}) {
        for (bool one : {false, true}) {
          std::size_t covered = 0;
          for (const auto& tc : g.tuple_classes(k, one)) {
            CHECK(tc.members.size() * tc.centralizer_order == g.order());
            CHECK(tc.members.front() == tc.representative);
            for (const auto& m : tc.members) CHECK(g.class_of(g.product(m)) == g.class_of(tc.product_index));
            CHECK(g.centralizer(tc.representative).size() == tc.centralizer_order);
            covered += tc.members.size();
          }
          std::size_t expected = 1;
          for (std::size_t i = 0; i < (one ? k - 1 : k); ++i) expected *= g.order();
          CHECK(covered == expected);
        }
      }
    }
  }

  TEST_CASE("tuple enumeration cap") {
    const auto s4 = testing::load("s4.json");
    try {
      (void)s4.tuple_classes(6, true);
      FAIL("24^6 tuples enumerated");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EnumerationCapExceeded);
    }
  }

  TEST_CASE("centralizers in S3") {
    const auto s3 = testing::load("s3.json");
    const Index t12 = find_element(s3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
    const Index t13 = find_element(s3, {0, 0, 1, 0, 1, 0, 1, 0, 0});
    CHECK(s3.centralizer({0}).size() == 6);
    CHECK(s3.centralizer({t12}).size() == 2);
    CHECK(s3.centralizer({t12, t13}) == std::vector<Index>{0});
  }

  TEST_CASE("deterministic element order") {
    const auto a = testing::load("bd12.json");
    const auto b = testing::load("bd12.json");
    CHECK(a.elements() == b.elements());
    for (std::size_t c = 0; c < a.conjugacy_classes().size(); ++c)
      CHECK(a.conjugacy_classes()[c].representative == b.conjugacy_classes()[c].representative);
  }
}
