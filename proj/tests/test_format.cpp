#include <doctest.h>

#include "numsg/format.hpp"
#include "numsg/oracle.hpp"

using namespace numsg;

namespace {

NumericalSemigroup sg(std::initializer_list<Int> gens) { return NumericalSemigroup::from_generators(gens); }

}  // namespace

TEST_CASE("text") {
  CHECK(to_text(sg({3, 5, 7})) == "⟨3,5,7⟩");
  CHECK(to_text(std::vector<Int>{11, 13}) == "{11,13}");
  CHECK(to_text(std::vector<Int>{}) == "{}");
}

TEST_CASE("parse") {
  CHECK(parse_semigroup("3,5,7") == sg({3, 5, 7}));
  CHECK(parse_semigroup(" 5, 7 ,9") == sg({5, 7, 9}));
  CHECK(parse_semigroup("gaps:1,2,4") == sg({3, 5, 7}));
  CHECK(parse_semigroup("gaps:").is_whole());
  CHECK(parse_int_list("1,2,3") == std::vector<Int>{1, 2, 3});
  for (const char* bad : {"", "3,,5", "3,x", "3.5", "99999999999999999999999"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_semigroup(bad), Error);
  }
}

TEST_CASE("json round trip") {
  for (Int f = 1; f <= 10; ++f) {
    for (const auto& s : oracle::all_with_frobenius(f)) {
      const auto j = to_json(s);
      CHECK(j["frobenius"] == f);
      CHECK(semigroup_from_json(j) == s);
      CHECK(semigroup_from_json(Json::parse(j.dump())) == s);
    }
  }
  auto j = to_json(sg({3, 5, 7}));
  j["genus"] = 4;
  CHECK_THROWS_AS(semigroup_from_json(j), Error);
  CHECK_THROWS_AS(semigroup_from_json(Json::parse(R"({"msg":[4,6]})")), Error);
}
