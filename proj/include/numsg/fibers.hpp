#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "numsg/multiples.hpp"

namespace numsg {

struct FiberNode {
  NumericalSemigroup semigroup;
  /// x with this = parent ∖ {x}; absent for the root.
  std::optional<Int> removed_generator;
  std::size_t depth = 0;
  /// Index of the parent inside the owning FiberTree.
  std::optional<std::size_t> parent;
};

/// At least one bound must be set; fibers are infinite in general.
struct TruncationBounds {
  std::optional<Int> max_frobenius;
  std::optional<Int> max_genus;
  std::optional<std::size_t> max_depth;
  std::optional<std::size_t> max_nodes;

  bool any_finite() const noexcept { return max_frobenius || max_genus || max_depth || max_nodes; }
  bool admits(const NumericalSemigroup& t, std::size_t depth) const noexcept;
};

/// Depth-first slice of the rooted tree on Θ⁻¹(root). Nodes are stored in
/// preorder; children are visited by ascending removed generator.
struct FiberTree {
  NumericalSemigroup root;
  std::vector<FiberNode> nodes;
  /// True when max_nodes stopped the walk before the pruned tree was exhausted.
  bool truncated_by_node_limit = false;
};

/// θ, Θ, children and fiber enumeration for one (S, d). Memoizes θ per gap
/// set; the cache lives as long as the explorer.
class FiberExplorer {
 public:
  explicit FiberExplorer(MultipleContext ctx);

  const MultipleContext& context() const noexcept { return ctx_; }

  /// None iff T ∈ max M_d(S).
  std::optional<Int> theta(const NumericalSemigroup& t);
  NumericalSemigroup saturate(const NumericalSemigroup& t);
  std::vector<FiberNode> children(const NumericalSemigroup& t, std::size_t depth = 0);
  FiberTree enumerate_fiber(const NumericalSemigroup& root, const TruncationBounds& bounds);
  bool divisibility_check(const NumericalSemigroup& t);

  std::size_t cache_size() const noexcept { return cache_.size(); }

 private:
  void require_multiple(const NumericalSemigroup& t) const;
  std::optional<Int> theta_unchecked(const NumericalSemigroup& t);

  MultipleContext ctx_;
  std::unordered_map<NumericalSemigroup, std::optional<Int>> cache_;
};

std::optional<Int> theta(const MultipleContext& ctx, const NumericalSemigroup& t);
NumericalSemigroup saturate(const MultipleContext& ctx, const NumericalSemigroup& t);
std::vector<FiberNode> children(const MultipleContext& ctx, const NumericalSemigroup& t);
FiberTree enumerate_fiber(const MultipleContext& ctx, const NumericalSemigroup& root, const TruncationBounds& bounds);
bool divisibility_check(const MultipleContext& ctx, const NumericalSemigroup& t);

}  // namespace numsg
