#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "numsg/multiples.hpp"

// Slow, independent enumerators and checkers. Nothing here calls the
// production algorithms; results are only converted to NumericalSemigroup at
// the very end.
namespace numsg::oracle {

struct EnumerationBudget {
  Int max_frobenius;
  Int max_genus;
  std::size_t hard_node_limit;
};

/// Largest f accepted by all_with_frobenius: NUMSGPS_ORACLE_CEILING or 20.
Int oracle_ceiling();

/// Every numerical semigroup with Frobenius number f, canonical order.
/// Decides membership of 1, 2, ..., f-1 in turn, forcing sums of members.
std::vector<NumericalSemigroup> all_with_frobenius(Int f);

/// Same set, grown as the genus tree from ℕ (remove a minimal generator
/// above the Frobenius number) and filtered by F = f.
std::vector<NumericalSemigroup> all_with_frobenius_by_tree(Int f);

/// All S ≠ ℕ with F(S) ≤ f, canonical order.
std::vector<NumericalSemigroup> all_up_to_frobenius(Int f);

/// Every T with d·(ℕ∖S) ⊆ ℕ∖T ⊆ ℕ∖d·S, F(T) ≤ max_frobenius and
/// g(T) ≤ max_genus. CeilingExceeded past hard_node_limit.
std::vector<NumericalSemigroup> all_multiples_bounded(const MultipleContext& ctx, const EnumerationBudget& budget);

/// Whether some T ∈ M_d(S) contains X. Searches F(T) = d·F(S) only, which
/// suffices: (⟨X⟩ + d·S) ∪ (d·F(S), ∞) is such a T whenever any exists.
bool exists_multiple_containing(const MultipleContext& ctx, std::span<const Int> x, std::size_t node_limit);

/// Lexicographically least X of minimum size with ⟨X⟩ + d·S = M on [0, bound],
/// where `elements` lists M ∩ [0, bound].
std::vector<Int> brute_minimal_md_system(const MultipleContext& ctx, std::span<const Int> elements, Int bound);

/// Straight from the definitions, by scanning [0, F(S) + x].
std::vector<Int> brute_apery(const NumericalSemigroup& s, Int x);
std::vector<Int> brute_pseudo_frobenius(const NumericalSemigroup& s);
std::vector<Int> brute_msg(const NumericalSemigroup& s);
/// No semigroup with the same Frobenius number strictly contains S.
bool brute_is_irreducible(const NumericalSemigroup& s);
/// {x : d·x ∈ T} from membership bits.
NumericalSemigroup brute_quotient(const NumericalSemigroup& t, Int d);

}  // namespace numsg::oracle
