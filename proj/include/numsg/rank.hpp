#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "numsg/fibers.hpp"

namespace numsg {

struct AperyWitness {
  std::size_t index;    // position of a_i in msg(S), 0-based
  Int generator;        // a_i
  Int sum_of_others;    // Σ_{j≠i} a_j
  bool in_apery;        // sum_of_others ∈ Ap(S, a_i)
};

/// Verdict of the sufficient condition Σ_{j≠i} a_j ∈ Ap(S, a_i) for all i.
/// condition_holds proves full quotient rank; false proves nothing.
struct RankReport {
  NumericalSemigroup semigroup;
  bool condition_holds = false;
  std::vector<AperyWitness> witnesses;
  /// m(S) ≥ 2^{e-1}. Implied by condition_holds.
  bool multiplicity_bound_ok = false;
};

RankReport full_rank_condition(const NumericalSemigroup& s);

/// Pairwise coprime c_1..c_e ≥ 2 (e ≥ 2) and the generators a_i = ∏_{j≠i} c_j.
class UniqueBettiSpec {
 public:
  static UniqueBettiSpec create(std::vector<Int> c);

  const std::vector<Int>& c() const noexcept { return c_; }
  /// a_i in the order of c.
  const std::vector<Int>& msg_out() const noexcept { return msg_out_; }

 private:
  UniqueBettiSpec(std::vector<Int> c, std::vector<Int> msg_out) : c_(std::move(c)), msg_out_(std::move(msg_out)) {}
  std::vector<Int> c_;
  std::vector<Int> msg_out_;
};

NumericalSemigroup unique_betti(const UniqueBettiSpec& spec);
/// {Σ_{j≠i} u_j a_j : 0 ≤ u_j < c_j}, sorted; equals Ap(S, a_i).
std::vector<Int> unique_betti_apery(const UniqueBettiSpec& spec, std::size_t i);

/// J ⊊ {0..e-1} nonempty and u_j (j ∉ J, not all zero) with
/// Σ_{j∈J} a_j = Σ_{j∉J} u_j a_j.
struct JSubsetWitness {
  std::vector<std::size_t> subset;
  std::vector<Int> coefficients;  // one per generator; zero on the subset
  Int sum;
};

/// Exhaustive search, masks in increasing order; e is capped at 24.
std::optional<JSubsetWitness> j_subset_obstruction(const NumericalSemigroup& s);

struct LowEMultiple {
  Int d;
  NumericalSemigroup multiple;
};

/// First multiple T with e(T) < e(S) among the truncated fibers for
/// d = 1..d_max (smallest d, then smallest genus, then canonical order).
/// A hit certifies quotient rank < e(S); none proves nothing.
std::optional<LowEMultiple> bounded_low_e_multiple_search(const NumericalSemigroup& s, Int d_max,
                                                          const TruncationBounds& bounds);

struct RankSweepOptions {
  std::size_t count = 100;
  Int max_genus = 10;
  std::uint64_t seed = 1;
  Int d_max = 2;
  TruncationBounds search_bounds;
};

struct RankSweepRow {
  NumericalSemigroup semigroup;
  RankReport report;
  bool obstruction_found;
  std::optional<LowEMultiple> low_e;
};

/// Random semigroups drawn by walking the genus tree from ℕ; the walk is a
/// pure function of the seed.
std::vector<RankSweepRow> rank_sweep(const RankSweepOptions& options);
void write_sweep_csv(std::ostream& out, const std::vector<RankSweepRow>& rows);

}  // namespace numsg
