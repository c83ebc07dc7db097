#pragma once

#include <span>
#include <vector>

#include "numsg/multiples.hpp"

namespace numsg {

/// The submonoid ⟨X⟩ + d·S of ℕ for an M_d(S)-set X.
///
/// Every such monoid equals g·M' where g = gcd(X ∪ {d}) and M' is a
/// numerical semigroup, so it is stored exactly as the pair (g, M'). The
/// monoid is itself a numerical semigroup iff g = 1.
class MdMonoid {
 public:
  const MultipleContext& context() const noexcept { return context_; }
  const std::vector<Int>& x_set() const noexcept { return x_set_; }
  Int scale() const noexcept { return scale_; }
  /// M / scale.
  const NumericalSemigroup& reduced() const noexcept { return reduced_; }
  bool is_semigroup() const noexcept { return scale_ == 1; }

  bool contains(Int n) const noexcept { return n >= 0 && n % scale_ == 0 && reduced_.contains(n / scale_); }
  /// Elements of M in [0, bound].
  std::vector<Int> elements_up_to(Int bound) const;
  /// A bound past which every element of M is generated by those below it:
  /// scale · (F(M') + 1 + max msg(M')).
  Int element_bound() const;

  std::vector<Int> msg() const;
  const std::vector<Int>& minimal_system() const noexcept { return minimal_system_; }

  /// Throws NotNumerical unless is_semigroup().
  const NumericalSemigroup& as_semigroup() const;

 private:
  friend MdMonoid build_monoid(const MultipleContext& ctx, std::span<const Int> x);
  MdMonoid(MultipleContext ctx, std::vector<Int> x, Int scale, NumericalSemigroup reduced);

  MultipleContext context_;
  std::vector<Int> x_set_;
  Int scale_;
  NumericalSemigroup reduced_;
  std::vector<Int> minimal_system_;
};

/// ⟨X⟩ ∩ d·(ℕ∖S) = ∅, checked only at the points of d·(ℕ∖S).
bool is_md_set(const MultipleContext& ctx, std::span<const Int> x);

MdMonoid build_monoid(const MultipleContext& ctx, std::span<const Int> x);

/// msg(M) ∖ d·msg(S)
std::vector<Int> minimal_md_system(const MdMonoid& monoid);
std::size_t md_embedding_dimension(const MdMonoid& monoid);

/// The minimal X with T = ⟨X⟩ + d·S.
std::vector<Int> decompose_multiple(const MultipleContext& ctx, const NumericalSemigroup& t);

}  // namespace numsg
