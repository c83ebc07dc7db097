#pragma once

#include <cstddef>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

/// A base semigroup S and a factor d, with the scaled data every M_d(S)
/// predicate needs: d·(ℕ∖S) and d·F(S).
class MultipleContext {
 public:
  MultipleContext(NumericalSemigroup base, Int d);

  const NumericalSemigroup& base() const noexcept { return base_; }
  Int d() const noexcept { return d_; }
  const std::vector<Int>& scaled_gaps() const noexcept { return scaled_gaps_; }
  Int scaled_frobenius() const noexcept { return scaled_frobenius_; }

  /// n ∈ d·S
  bool in_scaled_base(Int n) const noexcept { return n >= 0 && n % d_ == 0 && base_.contains(n / d_); }
  /// n ∈ d·(ℕ∖S)
  bool in_scaled_gaps(Int n) const noexcept { return n > 0 && n % d_ == 0 && !base_.contains(n / d_); }

 private:
  NumericalSemigroup base_;
  Int d_;
  std::vector<Int> scaled_gaps_;
  Int scaled_frobenius_;
};

struct MaxMultiplesResult {
  MultipleContext context;
  std::vector<NumericalSemigroup> maximals;  // canonical order
};

enum class MaxMultiplesStrategy {
  /// Branch and bound over Apéry (Kunz) coordinates with respect to d·m(S).
  kunz,
  /// Breadth-first closure of the ground semigroup d·S ∪ (d·F(S), ∞) under
  /// single addable pseudo-Frobenius adjunctions.
  saturation,
};

struct MaxMultiplesOptions {
  MaxMultiplesStrategy strategy = MaxMultiplesStrategy::kunz;
  /// Search nodes before giving up with CeilingExceeded.
  std::size_t node_limit = 50'000'000;
};

/// T/d = {x ∈ ℕ : d·x ∈ T}
NumericalSemigroup quotient(const NumericalSemigroup& t, Int d);

/// d·(ℕ∖S) ⊆ ℕ∖T ⊆ ℕ∖d·S
bool is_d_multiple(const MultipleContext& ctx, const NumericalSemigroup& t);

/// Members z ∈ PF(T) with 2z ∈ T and z ∉ d·(ℕ∖S), ascending. Each one can be
/// adjoined to T without leaving M_d(S); T is maximal iff this is empty.
std::vector<Int> addable_elements(const MultipleContext& ctx, const NumericalSemigroup& t);

/// d·S ∪ {n : n > d·F(S)}, the least element of M_d(S) with Frobenius d·F(S).
NumericalSemigroup ground_multiple(const MultipleContext& ctx);

MaxMultiplesResult max_multiples(const MultipleContext& ctx, const MaxMultiplesOptions& options = {});

struct IrreducibilityTransfer {
  bool base_irreducible;
  bool all_maximals_irreducible;
};

IrreducibilityTransfer irreducibility_transfer(const MultipleContext& ctx);

}  // namespace numsg
