#pragma once

#include <vector>

#include "numsg/multiples.hpp"

namespace numsg {

/// A d-multiple of S of M_d(S)-embedding dimension one: T = ⟨x⟩ + d·S with
/// x ∈ S and gcd(x, d) = 1. For d ≥ 2, x = min(T ∖ d·S).
class Ed1Multiple {
 public:
  const MultipleContext& context() const noexcept { return context_; }
  Int x() const noexcept { return x_; }
  const NumericalSemigroup& semigroup() const noexcept { return semigroup_; }

 private:
  friend Ed1Multiple construct_ed1(const MultipleContext& ctx, Int x);
  Ed1Multiple(MultipleContext ctx, Int x, NumericalSemigroup t)
      : context_(std::move(ctx)), x_(x), semigroup_(std::move(t)) {}

  MultipleContext context_;
  Int x_;
  NumericalSemigroup semigroup_;
};

Ed1Multiple construct_ed1(const MultipleContext& ctx, Int x);

/// (d-1)·x + d·F(S)
Int ed1_frobenius(const Ed1Multiple& m);
/// (d-1)(x-1)/2 + d·g(S)
Int ed1_genus(const Ed1Multiple& m);
/// {d·f + (d-1)·x : f ∈ PF(S)}
std::vector<Int> ed1_pseudo_frobenius(const Ed1Multiple& m);
/// T ∪ {θ(T)} = ⟨x, (d-1)x + d·F(S)⟩ + d·S; needs d ≥ 2.
NumericalSemigroup ed1_theta_closure(const Ed1Multiple& m);
/// d ≥ 2 and x ∈ S ∖ msg(S)
bool is_gluing_of_N_and_S(const Ed1Multiple& m);

struct SymmetryTransfer {
  bool base_symmetric;
  bool multiple_symmetric;
};

SymmetryTransfer ed1_symmetry_transfer(const Ed1Multiple& m);

}  // namespace numsg
