#include "numsg/fibers.hpp"

#include <algorithm>

namespace numsg {

bool TruncationBounds::admits(const NumericalSemigroup& t, std::size_t depth) const noexcept {
  if (max_frobenius && t.frobenius() > *max_frobenius) return false;
  if (max_genus && t.genus() > *max_genus) return false;
  if (max_depth && depth > *max_depth) return false;
  return true;
}

FiberExplorer::FiberExplorer(MultipleContext ctx) : ctx_(std::move(ctx)) {
  if (ctx_.base().is_whole()) fail(Errc::whole_n, "fibers of Θ require S ≠ ℕ");
}

void FiberExplorer::require_multiple(const NumericalSemigroup& t) const {
  if (!is_d_multiple(ctx_, t)) fail(Errc::not_a_multiple, "T is not a d-multiple of S");
}

std::optional<Int> FiberExplorer::theta_unchecked(const NumericalSemigroup& t) {
  // d ∤ F(T) forces θ(T) = F(T).
  if (t.frobenius() % ctx_.d() != 0) return t.frobenius();
  if (auto it = cache_.find(t); it != cache_.end()) return it->second;
  const auto addable = addable_elements(ctx_, t);
  std::optional<Int> result;
  if (!addable.empty()) result = addable.back();
  cache_.emplace(t, result);
  return result;
}

std::optional<Int> FiberExplorer::theta(const NumericalSemigroup& t) {
  require_multiple(t);
  return theta_unchecked(t);
}

NumericalSemigroup FiberExplorer::saturate(const NumericalSemigroup& t) {
  require_multiple(t);
  NumericalSemigroup current = t;
  while (auto next = theta_unchecked(current)) current = adjoin(current, *next);
  return current;
}

std::vector<FiberNode> FiberExplorer::children(const NumericalSemigroup& t, std::size_t depth) {
  require_multiple(t);
  std::vector<FiberNode> out;
  const bool minimal_frobenius = t.frobenius() == ctx_.scaled_frobenius();
  for (Int x : t.msg()) {
    if (ctx_.in_scaled_base(x)) continue;
    if (!minimal_frobenius) {
      // Off the minimal Frobenius number the θ test collapses to x > F(T).
      if (x > t.frobenius()) out.push_back({remove_minimal_generator(t, x), x, depth + 1, std::nullopt});
      continue;
    }
    auto child = remove_minimal_generator(t, x);
    if (theta_unchecked(child) == x) out.push_back({std::move(child), x, depth + 1, std::nullopt});
  }
  return out;
}

FiberTree FiberExplorer::enumerate_fiber(const NumericalSemigroup& root, const TruncationBounds& bounds) {
  if (!bounds.any_finite()) fail(Errc::bounds_missing, "fiber enumeration needs at least one finite bound");
  require_multiple(root);
  if (theta_unchecked(root)) fail(Errc::not_maximal, "the root is not in max M_d(S)");

  FiberTree tree{root, {}, false};
  if (!bounds.admits(root, 0)) return tree;

  std::vector<FiberNode> stack{{root, std::nullopt, 0, std::nullopt}};
  while (!stack.empty()) {
    if (bounds.max_nodes && tree.nodes.size() >= *bounds.max_nodes) {
      tree.truncated_by_node_limit = true;
      break;
    }
    FiberNode node = std::move(stack.back());
    stack.pop_back();
#if NUMSG_INVARIANT_CHECKS
    divisibility_check(node.semigroup);
#endif
    const std::size_t index = tree.nodes.size();
    auto kids = children(node.semigroup, node.depth);
    tree.nodes.push_back(std::move(node));
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (!bounds.admits(it->semigroup, it->depth)) continue;
      it->parent = index;
      stack.push_back(std::move(*it));
    }
  }
  return tree;
}

bool FiberExplorer::divisibility_check(const NumericalSemigroup& t) {
  require_multiple(t);
  const bool divisible = t.frobenius() % ctx_.d() == 0;
  ensure(divisible == (t.frobenius() == ctx_.scaled_frobenius()), "d | F(T) disagrees with F(T) = d·F(S)");
  return divisible;
}

std::optional<Int> theta(const MultipleContext& ctx, const NumericalSemigroup& t) {
  return FiberExplorer(ctx).theta(t);
}

NumericalSemigroup saturate(const MultipleContext& ctx, const NumericalSemigroup& t) {
  return FiberExplorer(ctx).saturate(t);
}

std::vector<FiberNode> children(const MultipleContext& ctx, const NumericalSemigroup& t) {
  return FiberExplorer(ctx).children(t);
}

FiberTree enumerate_fiber(const MultipleContext& ctx, const NumericalSemigroup& root, const TruncationBounds& bounds) {
  return FiberExplorer(ctx).enumerate_fiber(root, bounds);
}

bool divisibility_check(const MultipleContext& ctx, const NumericalSemigroup& t) {
  return FiberExplorer(ctx).divisibility_check(t);
}

}  // namespace numsg
