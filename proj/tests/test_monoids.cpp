#include <doctest.h>

#include "checks.hpp"
#include "numsg/monoids.hpp"
#include "numsg/oracle.hpp"

using namespace numsg;

namespace {

NumericalSemigroup sg(std::initializer_list<Int> gens) { return NumericalSemigroup::from_generators(gens); }
std::vector<Int> v(std::initializer_list<Int> xs) { return xs; }

}  // namespace

TEST_CASE("is_md_set") {
  MultipleContext ctx(sg({5, 7, 9}), 2);
  CHECK(is_md_set(ctx, v({9, 10})));
  CHECK(is_md_set(ctx, v({})));
  CHECK_FALSE(is_md_set(ctx, v({2})));
  CHECK(is_md_set(ctx, v({0, 9})));
  CHECK_THROWS_AS(is_md_set(ctx, v({-1})), Error);
}

TEST_CASE("build_monoid") {
  MultipleContext ctx(sg({5, 7, 9}), 2);
  const auto m = build_monoid(ctx, v({9}));
  REQUIRE(m.is_semigroup());
  CHECK(m.as_semigroup() == sg({9, 10, 14}));
  CHECK(minimal_md_system(m) == v({9}));
  CHECK(md_embedding_dimension(m) == 1);

  const auto m2 = build_monoid(ctx, v({9, 10}));
  CHECK(m2.as_semigroup() == sg({9, 10, 14}));
  CHECK(minimal_md_system(m2) == v({9}));

  const auto ds = build_monoid(ctx, v({}));
  CHECK_FALSE(ds.is_semigroup());
  CHECK(md_embedding_dimension(ds) == 0);
  CHECK(ds.contains(10));
  CHECK_FALSE(ds.contains(12));
  CHECK_FALSE(ds.contains(9));
  CHECK_THROWS_AS(ds.as_semigroup(), Error);

  MultipleContext c34(sg({3, 4}), 2);
  const auto m3 = build_monoid(c34, v({3}));
  CHECK(m3.as_semigroup() == sg({3, 8}));
  CHECK(minimal_md_system(m3) == v({3}));
  CHECK(md_embedding_dimension(m3) == 1);

  try {
    build_monoid(ctx, v({2}));
    FAIL("expected NotMdSet");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_md_set);
  }
}

TEST_CASE("monoid with a common divisor") {
  MultipleContext ctx(sg({3, 5, 7}), 4);
  const auto m = build_monoid(ctx, v({6}));
  CHECK(m.scale() == 2);
  CHECK_FALSE(m.is_semigroup());
  for (Int n : m.elements_up_to(60)) CHECK(n % 2 == 0);
  CHECK(m.minimal_system() == v({6}));
}

TEST_CASE("decompose_multiple") {
  CHECK(decompose_multiple(MultipleContext(sg({5, 7, 9}), 2), sg({9, 10, 14})) == v({9}));
  CHECK(decompose_multiple(MultipleContext(sg({5, 7, 9}), 1), sg({5, 7, 9})).empty());
  CHECK(decompose_multiple(MultipleContext(sg({2, 3}), 11), sg({5, 7, 8, 9})) == v({5, 7, 8, 9}));
  try {
    decompose_multiple(MultipleContext(sg({5, 7, 9}), 2), sg({2, 3}));
    FAIL("expected NotAMultiple");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_multiple);
  }
}

TEST_CASE("brute minimal system matches") {
  MultipleContext ctx(sg({5, 7, 9}), 2);
  const auto m = build_monoid(ctx, v({9}));
  const Int bound = m.element_bound();
  CHECK(oracle::brute_minimal_md_system(ctx, m.elements_up_to(bound), bound) == v({9}));
  const auto ds = build_monoid(ctx, v({}));
  CHECK(oracle::brute_minimal_md_system(ctx, ds.elements_up_to(ds.element_bound()), ds.element_bound()).empty());
}

TEST_CASE("property: four equivalences on 300 random sets") {
  const auto r = checks::md_equivalence_battery(300, 11);
  INFO(r.summary());
  CHECK(r.ok());
}

TEST_CASE("property: minimal system against exhaustive search") {
  const auto r = checks::md_minimality_vs_oracle(60, 5);
  INFO(r.summary());
  CHECK(r.ok());
}

TEST_CASE("property: smallest monoid containing X") {
  const auto r = checks::smallest_monoid(5, 3, 3, 3);
  INFO(r.summary());
  CHECK(r.ok());
}

TEST_CASE("property: infinite intersection of tails is dS") {
  const auto r = checks::infinite_intersection_caveat(8, 4);
  INFO(r.summary());
  CHECK(r.ok());
}
