#include "numsg/monoids.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace numsg {

namespace {

std::vector<Int> positive_sorted_unique(std::span<const Int> x) {
  std::vector<Int> out;
  for (Int v : x) {
    if (v < 0) fail(Errc::invalid_input, "M_d(S)-set entries must be natural numbers");
    if (v > 0) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Int> scaled_msg(const MultipleContext& ctx) {
  std::vector<Int> out;
  for (Int a : ctx.base().msg()) out.push_back(checked_mul(ctx.d(), a));
  return out;
}

std::vector<Int> without(const std::vector<Int>& values, const std::vector<Int>& removed) {
  std::vector<Int> out;
  std::set_difference(values.begin(), values.end(), removed.begin(), removed.end(), std::back_inserter(out));
  return out;
}

}  // namespace

MdMonoid::MdMonoid(MultipleContext ctx, std::vector<Int> x, Int scale, NumericalSemigroup reduced)
    : context_(std::move(ctx)), x_set_(std::move(x)), scale_(scale), reduced_(std::move(reduced)) {
  minimal_system_ = without(msg(), scaled_msg(context_));
}

std::vector<Int> MdMonoid::elements_up_to(Int bound) const {
  std::vector<Int> out;
  for (Int n = 0; n <= bound; n += scale_) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

Int MdMonoid::element_bound() const {
  return checked_mul(scale_, reduced_.conductor() + reduced_.msg().back());
}

std::vector<Int> MdMonoid::msg() const {
  std::vector<Int> out;
  for (Int a : reduced_.msg()) out.push_back(checked_mul(scale_, a));
  return out;
}

const NumericalSemigroup& MdMonoid::as_semigroup() const {
  if (!is_semigroup()) {
    fail(Errc::not_numerical, "monoid has gcd " + std::to_string(scale_) + ", not a numerical semigroup");
  }
  return reduced_;
}

bool is_md_set(const MultipleContext& ctx, std::span<const Int> x) {
  const auto gens = positive_sorted_unique(x);
  const auto& targets = ctx.scaled_gaps();
  if (targets.empty() || gens.empty()) return true;
  // Bounded coin problem: which points up to d·F(S) does ⟨X⟩ reach?
  const Int top = targets.back();
  std::vector<bool> reach(static_cast<std::size_t>(top) + 1, false);
  reach[0] = true;
  for (Int n = 1; n <= top; ++n) {
    for (Int g : gens) {
      if (g > n) break;
      if (reach[static_cast<std::size_t>(n - g)]) {
        reach[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  return std::none_of(targets.begin(), targets.end(), [&](Int b) { return reach[static_cast<std::size_t>(b)]; });
}

MdMonoid build_monoid(const MultipleContext& ctx, std::span<const Int> x) {
  if (!is_md_set(ctx, x)) fail(Errc::not_md_set, "X meets d·(ℕ∖S)");
  auto gens = positive_sorted_unique(x);
  Int scale = ctx.d();
  for (Int v : gens) scale = std::gcd(scale, v);

  std::vector<Int> reduced_gens;
  for (Int v : gens) reduced_gens.push_back(v / scale);
  for (Int a : ctx.base().msg()) reduced_gens.push_back(checked_mul(ctx.d() / scale, a));
  auto reduced = NumericalSemigroup::from_generators(reduced_gens);
  return MdMonoid(ctx, std::move(gens), scale, std::move(reduced));
}

std::vector<Int> minimal_md_system(const MdMonoid& monoid) { return monoid.minimal_system(); }

std::size_t md_embedding_dimension(const MdMonoid& monoid) { return monoid.minimal_system().size(); }

std::vector<Int> decompose_multiple(const MultipleContext& ctx, const NumericalSemigroup& t) {
  if (!is_d_multiple(ctx, t)) fail(Errc::not_a_multiple, "T is not a d-multiple of S");
  auto x = without(t.msg(), scaled_msg(ctx));
#if NUMSG_INVARIANT_CHECKS
  const auto rebuilt = build_monoid(ctx, x);
  ensure(rebuilt.is_semigroup() && rebuilt.as_semigroup() == t, "⟨X⟩ + d·S does not regenerate T");
#endif
  return x;
}

}  // namespace numsg
