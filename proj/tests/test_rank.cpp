#include <doctest.h>

#include <sstream>

#include "checks.hpp"
#include "numsg/oracle.hpp"
#include "numsg/rank.hpp"

using namespace numsg;

namespace {

NumericalSemigroup sg(std::initializer_list<Int> gens) { return NumericalSemigroup::from_generators(gens); }
std::vector<Int> v(std::initializer_list<Int> xs) { return xs; }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::invariant_violation;
}

}  // namespace

TEST_CASE("full_rank_condition on ⟨21,24,25,31⟩") {
  const auto s = sg({21, 24, 25, 31});
  const auto r = full_rank_condition(s);
  CHECK(r.condition_holds);
  CHECK(r.multiplicity_bound_ok);
  REQUIRE(r.witnesses.size() == 4);
  const std::vector<Int> sums{80, 77, 76, 70};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(r.witnesses[i].index == i);
    CHECK(r.witnesses[i].generator == s.msg()[i]);
    CHECK(r.witnesses[i].sum_of_others == sums[i]);
    CHECK(r.witnesses[i].in_apery);
    const auto ap = oracle::brute_apery(s, s.msg()[i]);
    CHECK(std::binary_search(ap.begin(), ap.end(), sums[i]));
  }
}

TEST_CASE("full_rank_condition failures") {
  const auto r = full_rank_condition(sg({4, 5, 6, 7}));
  CHECK_FALSE(r.condition_holds);
  CHECK_FALSE(r.multiplicity_bound_ok);
  CHECK_FALSE(r.witnesses[0].in_apery);
  CHECK(full_rank_condition(sg({2, 3})).condition_holds);
  CHECK(full_rank_condition(sg({5, 7, 9})).condition_holds == false);
  CHECK(code_of([] { full_rank_condition(NumericalSemigroup()); }) == Errc::whole_n);
}

TEST_CASE("unique Betti family") {
  const auto spec = UniqueBettiSpec::create({3, 4, 5});
  CHECK(spec.msg_out() == v({20, 15, 12}));
  const auto s = unique_betti(spec);
  CHECK(s == sg({12, 15, 20}));
  CHECK(full_rank_condition(s).condition_holds);
  for (std::size_t i = 0; i < 3; ++i) CHECK(unique_betti_apery(spec, i) == apery(s, spec.msg_out()[i]));
  CHECK(unique_betti_apery(spec, 2).size() == 12);

  CHECK(code_of([] { UniqueBettiSpec::create({4, 6}); }) == Errc::not_pairwise_coprime);
  CHECK(code_of([] { UniqueBettiSpec::create({5}); }) == Errc::too_small);
  CHECK(code_of([] { UniqueBettiSpec::create({1, 5}); }) == Errc::too_small);
  CHECK(code_of([] { UniqueBettiSpec::create({Int{1} << 40, (Int{1} << 40) - 1, (Int{1} << 40) + 1}); }) ==
        Errc::overflow);
}

TEST_CASE("J-subset obstruction") {
  const auto w = j_subset_obstruction(sg({4, 5, 6, 7}));
  REQUIRE(w.has_value());
  CHECK(w->subset == std::vector<std::size_t>{0, 2});
  CHECK(w->coefficients == v({0, 2, 0, 0}));
  CHECK(w->sum == 10);
  CHECK_FALSE(j_subset_obstruction(sg({21, 24, 25, 31})).has_value());
  CHECK_FALSE(j_subset_obstruction(sg({12, 15, 20})).has_value());
}

TEST_CASE("bounded low-e search") {
  TruncationBounds b;
  b.max_genus = 20;
  CHECK_FALSE(bounded_low_e_multiple_search(sg({4, 6, 9}), 2, b).has_value());
  CHECK(code_of([&] { bounded_low_e_multiple_search(sg({4, 6, 9}), 0, b); }) == Errc::invalid_input);
  CHECK(code_of([] { bounded_low_e_multiple_search(sg({4, 6, 9}), 2, TruncationBounds{}); }) ==
        Errc::bounds_missing);
  CHECK(code_of([&] { bounded_low_e_multiple_search(NumericalSemigroup(), 2, b); }) == Errc::whole_n);

  // ⟨4,5,6,7⟩ fails the condition; a hit must have fewer generators and be a multiple.
  const auto s = sg({4, 5, 6, 7});
  b.max_genus = 12;
  const auto hit = bounded_low_e_multiple_search(s, 2, b);
  if (hit) {
    CHECK(hit->multiple.embedding_dimension() < s.embedding_dimension());
    CHECK(is_d_multiple(MultipleContext(s, hit->d), hit->multiple));
  }
}

TEST_CASE("rank sweep is a function of the seed") {
  RankSweepOptions o;
  o.count = 15;
  o.max_genus = 6;
  o.seed = 42;
  o.search_bounds.max_genus = 12;
  o.search_bounds.max_nodes = 500;
  std::ostringstream a, b;
  write_sweep_csv(a, rank_sweep(o));
  write_sweep_csv(b, rank_sweep(o));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("index,msg,genus,frobenius,multiplicity,embedding_dimension,", 0) == 0);
  for (const auto& row : rank_sweep(o)) {
    CHECK(row.semigroup.genus() <= 6);
    CHECK(row.semigroup.genus() >= 1);
    if (row.report.condition_holds) CHECK_FALSE(row.low_e.has_value());
  }
}

TEST_CASE("property: unique Betti generators, products up to 300") {
  const auto r = checks::unique_betti_family(300);
  INFO(r.summary());
  CHECK(r.ok());
}

TEST_CASE("property: rank consistency, F up to 7") {
  const auto r = checks::rank_consistency(7, 2, 4);
  INFO(r.summary());
  CHECK(r.ok());
}
