#include <random>

#include "doctest.h"
#include "orbcoh/error.hpp"
#include "orbcoh/io.hpp"
#include "orbcoh/rational.hpp"
#include "support.hpp"

using namespace orbcoh;
using io::Json;

namespace {

std::string parse_error(const std::string& doc) {
  try {
    (void)io::parse_group(Json::parse(doc));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return e.what();
  }
  FAIL("document accepted");
  return {};
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("rational parsing") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-2/4") == make_rational(-1, 2));
    for (const char* bad : {"1//2", "1/0", "", "1/", "/2", "a", "1.5", "1/2/3"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS((void)parse_rational(bad), Error);
    }
  }

  TEST_CASE("malformed entries are named") {
    const auto msg = parse_error(R"({"conductor": 4, "dimension": 1, "generators": [[[["0", "1//2"]]]]})");
    CHECK(msg.find("generators[0][0][0]") != std::string::npos);
    CHECK(msg.find("1//2") != std::string::npos);
    CHECK(parse_error(R"({"conductor": 4, "generators": []})").find("dimension") != std::string::npos);
  }

  TEST_CASE("entry forms") {
    const auto f = cyclo::CycField::get(4);
    CHECK(io::parse_cyc(Json(3), f, "x") == cyclo::CycNum(f, Rational(3)));
    CHECK(io::parse_cyc(Json("-1/2"), f, "x") == cyclo::CycNum(f, make_rational(-1, 2)));
    CHECK(io::parse_cyc(Json::parse(R"(["0", "1"])"), f, "x") == cyclo::CycNum::zeta_power(f, 1));
    CHECK_THROWS_AS((void)io::parse_cyc(Json::parse(R"(["0", "1", "0", "0", "0"])"), f, "x"), Error);
  }

  TEST_CASE("catalog inputs load") {
    CHECK(testing::load("q8.json").order() == 8);
    const auto kummer = io::load_torus(testing::catalog("kummer.json"));
    CHECK(kummer.real_dim == 4);
    REQUIRE(kummer.generators.size() == 1);
    auto minus = intmat::IntMatrix::identity(4);
    for (std::size_t i = 0; i < 4; ++i) minus(i, i) = -1;
    CHECK(kummer.generators[0] == minus);
  }

  TEST_CASE("JSON rationals round trip") {
    const auto field = cyclo::CycField::get(12);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Rational> c;
      for (int i = 0; i < 4; ++i) c.push_back(make_rational(static_cast<long>(rng() % 21) - 10, 1 + rng() % 9));
      const cyclo::CycNum x(field, c);
      CHECK(io::parse_cyc(io::to_json(x), field, "x") == x);
    }
    const auto table = io::to_json(models::catalog_wp(3, 5));
    for (const auto& [degree, dim] : table["betti"].items()) {
      const auto d = parse_rational(degree);
      CHECK(to_string(d) == degree);
      CHECK(dim.get<long>() == 1);
    }
  }

  TEST_CASE("ring serialization") {
    const auto ring = ring::ring_point(testing::load("s3.json"));
    const auto j = io::to_json(ring);
    CHECK(j["basis"].size() == 3);
    for (const auto& entry : j["products"]) {
      const auto i = entry[0].get<std::size_t>(), k = entry[2].get<std::size_t>();
      const auto jj = entry[1].get<std::size_t>();
      CHECK(ring.product(i, jj).at(k) == parse_rational(entry[3].get<std::string>()));
    }
    CHECK(io::to_text(ring) == io::to_text(ring::ring_point(testing::load("s3.json"))));
  }
}
