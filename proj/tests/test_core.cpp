#include <doctest.h>

#include <algorithm>
#include <limits>

#include "checks.hpp"
#include "numsg/oracle.hpp"
#include "numsg/semigroup.hpp"

using namespace numsg;

namespace {

NumericalSemigroup sg(std::initializer_list<Int> gens) { return NumericalSemigroup::from_generators(gens); }
std::vector<Int> v(std::initializer_list<Int> xs) { return xs; }

}  // namespace

TEST_CASE("from_generators") {
  const auto s = sg({3, 4, 5});
  CHECK(s.gaps() == v({1, 2}));
  CHECK(s.frobenius() == 2);
  CHECK(s.genus() == 2);

  const auto n = sg({1});
  CHECK(n.is_whole());
  CHECK(n.gaps().empty());
  CHECK(n.frobenius() == -1);
  CHECK(n.genus() == 0);
  CHECK(n == NumericalSemigroup());

  CHECK(sg({9, 10, 14, 18}).msg() == v({9, 10, 14}));
  CHECK(sg({5, 3, 5, 7}).msg() == v({3, 5, 7}));
}

TEST_CASE("from_generators rejects bad input") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::invariant_violation;
  };
  CHECK(code([] { sg({4, 6}); }) == Errc::not_numerical);
  CHECK(code([] { sg({0, 3}); }) == Errc::invalid_input);
  CHECK(code([] { sg({-2, 3}); }) == Errc::invalid_input);
  CHECK(code([] { NumericalSemigroup::from_generators(std::vector<Int>{}); }) == Errc::invalid_input);
}

TEST_CASE("from_gaps") {
  CHECK(NumericalSemigroup::from_gaps({}).is_whole());
  CHECK(NumericalSemigroup::from_gaps({1, 2}) == sg({3, 4, 5}));
  CHECK(NumericalSemigroup::from_gaps({1, 2, 4}) == sg({3, 5, 7}));
  CHECK(NumericalSemigroup::from_gaps({1, 2, 4}).msg() == v({3, 5, 7}));
  CHECK(NumericalSemigroup::from_gaps({1, 2, 3, 6}) == sg({4, 5, 7}));

  try {
    NumericalSemigroup::from_gaps({2});
    FAIL("expected NotClosed");
  } catch (const NotClosedError& e) {
    CHECK(e.code() == Errc::not_closed);
    CHECK(e.a() == 1);
    CHECK(e.b() == 1);
  }
  try {
    NumericalSemigroup::from_gaps({1, 2, 3, 5, 8});
    FAIL("expected NotClosed");
  } catch (const NotClosedError& e) {
    CHECK(e.a() + e.b() == 8);
  }
}

TEST_CASE("contains") {
  const auto s = sg({3, 5, 7});
  CHECK_FALSE(s.contains(4));
  CHECK(s.contains(0));
  CHECK(s.contains(12));
  CHECK_FALSE(s.contains(-3));
}

TEST_CASE("apery") {
  const auto ap = apery(sg({21, 24, 25, 31}), 21);
  CHECK(std::binary_search(ap.begin(), ap.end(), 80));
  CHECK(ap.size() == 21);
  CHECK(apery(NumericalSemigroup(), 1) == v({0}));
  CHECK(apery(sg({2, 3}), 2) == v({0, 3}));
  CHECK_THROWS_AS(apery(sg({3, 5, 7}), 4), Error);
  CHECK_THROWS_AS(apery(sg({3, 5, 7}), 0), Error);
}

TEST_CASE("pseudo-Frobenius numbers and type") {
  CHECK(pseudo_frobenius(sg({5, 7, 9})) == v({11, 13}));
  CHECK(pseudo_frobenius(remove_minimal_generator(sg({6, 9, 11}), 9)) == v({9, 16, 25}));
  CHECK(pseudo_frobenius(sg({2, 3})) == v({1}));
  CHECK(type(sg({5, 7, 9})) == 2);
  CHECK(type(sg({2, 3})) == 1);
  CHECK(type(sg({4, 5, 6, 7})) == 3);
  CHECK(pseudo_frobenius(sg({4, 5, 6, 7})) == oracle::brute_pseudo_frobenius(sg({4, 5, 6, 7})));
  CHECK_THROWS_AS(pseudo_frobenius(NumericalSemigroup()), Error);
}

TEST_CASE("irreducibility") {
  const auto s = sg({3, 5, 7});
  CHECK(is_irreducible(s));
  CHECK(is_pseudo_symmetric(s));
  CHECK_FALSE(is_symmetric(s));
  CHECK(oracle::brute_is_irreducible(s));

  CHECK(is_symmetric(sg({2, 3})));
  CHECK_FALSE(is_irreducible(sg({5, 6, 8, 9})));
  CHECK_FALSE(oracle::brute_is_irreducible(sg({5, 6, 8, 9})));
  CHECK_THROWS_AS(is_irreducible(NumericalSemigroup()), Error);
}

TEST_CASE("remove_minimal_generator") {
  CHECK(remove_minimal_generator(sg({5, 7, 8, 9}), 8) == sg({5, 7, 9, 13}));
  CHECK(remove_minimal_generator(sg({5, 7, 8, 9}), 9) == sg({5, 7, 8}));
  CHECK(remove_minimal_generator(NumericalSemigroup(), 1) == sg({2, 3}));
  try {
    remove_minimal_generator(sg({5, 7, 8, 9}), 10);
    FAIL("expected NotMinimalGenerator");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_minimal_generator);
  }
}

TEST_CASE("adjoin") {
  CHECK(adjoin(sg({3, 5, 7}), 4) == sg({3, 4, 5}));
  CHECK(adjoin(sg({2, 3}), 1).is_whole());
  const auto s = sg({5, 7, 9});
  CHECK(adjoin(s, s.frobenius()).contains(13));

  auto reason = [](const NumericalSemigroup& t, Int x) {
    try {
      adjoin(t, x);
    } catch (const NotAdjoinableError& e) {
      return e.reason();
    }
    FAIL("expected NotAdjoinable");
    return AdjoinFailure::not_a_gap;
  };
  CHECK(reason(s, 7) == AdjoinFailure::not_a_gap);
  CHECK(reason(s, 1) == AdjoinFailure::not_pseudo_frobenius);
  // 2 ∈ PF(⟨3,5,7⟩) but 4 is a gap.
  CHECK(reason(sg({3, 5, 7}), 2) == AdjoinFailure::double_not_in_s);
}

TEST_CASE("intersect") {
  CHECK(intersect(sg({4, 5, 7}), sg({4, 7, 9, 10})) == sg({4, 7, 9, 10}));
  CHECK(intersect(sg({3, 5, 7}), NumericalSemigroup()) == sg({3, 5, 7}));
  const auto both = intersect(sg({2, 3}), sg({3, 4, 5}));
  CHECK(both.gaps() == v({1, 2}));
  CHECK(both == sg({3, 4, 5}));
}

TEST_CASE("brauer_step") {
  const auto r = brauer_step(9, std::vector<Int>{10, 14, 18});
  CHECK(r.frobenius == 35);
  CHECK(r.genus == 20);
  const auto s = sg({9, 10, 14, 18});
  CHECK(r == FrobeniusGenus{s.frobenius(), s.genus()});
  CHECK(brauer_step(5, std::vector<Int>{7, 9}) == FrobeniusGenus{13, 8});
  CHECK_THROWS_AS(brauer_step(4, std::vector<Int>{6, 8}), Error);
}

TEST_CASE("compare_in") {
  const auto w = compare_in(sg({3, 5, 7}), 2, 5);
  CHECK(w.difference_in_S);
  CHECK_FALSE(compare_in(sg({3, 5, 7}), 2, 4).difference_in_S);
}

TEST_CASE("overflow is reported") {
  CHECK_THROWS_AS(checked_mul(Int{1} << 62, 4), Error);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<Int>::max(), 1), Error);
}

TEST_CASE("property: round trip, genus up to 12") {
  const auto r = checks::round_trip(12);
  INFO(r.summary());
  CHECK(r.ok());
}

TEST_CASE("property: Apéry shape, F up to 24") {
  const auto r = checks::apery_shape(24);
  INFO(r.summary());
  CHECK(r.ok());
}

TEST_CASE("property: PF equals maximal gaps, genus up to 12") {
  const auto r = checks::pf_as_maximals(12);
  INFO(r.summary());
  CHECK(r.ok());
}

TEST_CASE("property: brauer_step on random tuples") {
  const auto r = checks::brauer_random(200, 200, 7);
  INFO(r.summary());
  CHECK(r.ok());
}

TEST_CASE("property: adjoin and remove are inverse") {
  const auto r = checks::adjoin_remove_inverse(16);
  INFO(r.summary());
  CHECK(r.ok());
}

TEST_CASE("property: irreducibility against maximality, F up to 12") {
  const auto r = checks::irreducibility_vs_oracle(12);
  INFO(r.summary());
  CHECK(r.ok());
}
