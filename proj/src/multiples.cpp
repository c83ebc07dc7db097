#include "numsg/multiples.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace numsg {

namespace {

std::size_t idx(Int x) { return static_cast<std::size_t>(x); }

Int round_up_to_class(Int value, Int residue, Int modulus) {
  const Int off = ((residue - value) % modulus + modulus) % modulus;
  return value + off;
}

// Search over Apéry coordinates w_r = min{t ∈ T : t ≡ r mod m}, m = d·m(S).
// A vector w describes a numerical semigroup iff w_{i+j} ≤ w_i + w_j; the
// bounds encode d·S ⊆ T (upper), T ∩ d·(ℕ∖S) = ∅ (lower) and n ∈ T for every
// n > d·F(S). T is maximal iff no coordinate can drop by m on its own.
class KunzSearch {
 public:
  KunzSearch(const MultipleContext& ctx, std::size_t node_limit)
      : ctx_(ctx), node_limit_(node_limit) {
    const Int top = ctx.scaled_frobenius();
    m_ = checked_mul(ctx.d(), ctx.base().multiplicity());
    lower_.assign(idx(m_), 0);
    upper_.assign(idx(m_), 0);
    for (Int r = 1; r < m_; ++r) {
      Int n = r;
      while (n <= top && !ctx.in_scaled_base(n)) n += m_;
      upper_[idx(r)] = n;
      lower_[idx(r)] = r;
    }
    for (Int b : ctx.scaled_gaps()) {
      Int& lo = lower_[idx(b % m_)];
      lo = std::max(lo, b + m_);
    }
  }

  std::vector<NumericalSemigroup> run() {
    std::vector<Int> lo = lower_;
    std::vector<Int> hi = upper_;
    recurse(lo, hi);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool propagate(std::vector<Int>& lo, std::vector<Int>& hi) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Int i = 1; i < m_; ++i) {
        for (Int j = i; j < m_; ++j) {
          const Int k = (i + j) % m_;
          if (k == 0) continue;
          const auto ui = idx(i), uj = idx(j), uk = idx(k);
          if (hi[uk] > hi[ui] + hi[uj]) {
            hi[uk] = hi[ui] + hi[uj];
            changed = true;
          }
          if (lo[ui] < lo[uk] - hi[uj]) {
            lo[ui] = round_up_to_class(lo[uk] - hi[uj], i, m_);
            changed = true;
          }
          if (lo[uj] < lo[uk] - hi[ui]) {
            lo[uj] = round_up_to_class(lo[uk] - hi[ui], j, m_);
            changed = true;
          }
          if (lo[ui] > hi[ui] || lo[uj] > hi[uj] || lo[uk] > hi[uk]) return false;
        }
      }
    }
    return true;
  }

  // Whether fixed coordinate r may still end up unable to drop by m.
  bool blockable(Int r, const std::vector<Int>& lo, const std::vector<Int>& hi) const {
    const Int lowered = hi[idx(r)] - m_;
    if (lowered < lower_[idx(r)]) return true;
    for (Int j = 1; j < m_; ++j) {
      const Int k = (r + j) % m_;
      if (k == 0) continue;
      if (j == r) {
        if (hi[idx(k)] > 2 * lowered) return true;
      } else if (hi[idx(k)] - lo[idx(j)] > lowered) {
        return true;
      }
    }
    return false;
  }

  void recurse(std::vector<Int>& lo, std::vector<Int>& hi) {
    if (++nodes_ > node_limit_) {
      fail(Errc::ceiling_exceeded, "max_multiples exceeded its node limit of " + std::to_string(node_limit_));
    }
    if (!propagate(lo, hi)) return;
    Int branch = 0;
    for (Int r = 1; r < m_; ++r) {
      if (lo[idx(r)] == hi[idx(r)]) {
        if (!blockable(r, lo, hi)) return;
      } else if (branch == 0) {
        branch = r;
      }
    }
    if (branch == 0) {
      emit(lo);
      return;
    }
    for (Int v = lo[idx(branch)]; v <= hi[idx(branch)]; v += m_) {
      std::vector<Int> lo2 = lo;
      std::vector<Int> hi2 = hi;
      lo2[idx(branch)] = hi2[idx(branch)] = v;
      recurse(lo2, hi2);
    }
  }

  void emit(const std::vector<Int>& w) {
    const Int top = ctx_.scaled_frobenius();
    std::vector<bool> member(idx(top) + 1);
    for (Int n = 0; n <= top; ++n) member[idx(n)] = n >= w[idx(n % m_)];
#if NUMSG_INVARIANT_CHECKS
    auto t = NumericalSemigroup::from_membership(std::move(member));
    ensure(is_d_multiple(ctx_, t) && addable_elements(ctx_, t).empty(), "Kunz search emitted a non-maximal multiple");
#else
    auto t = NumericalSemigroup::from_membership_unchecked(std::move(member));
#endif
    found_.push_back(std::move(t));
  }

  const MultipleContext& ctx_;
  std::size_t node_limit_;
  std::size_t nodes_ = 0;
  Int m_ = 0;
  std::vector<Int> lower_;
  std::vector<Int> upper_;
  std::vector<NumericalSemigroup> found_;
};

std::vector<NumericalSemigroup> saturation_search(const MultipleContext& ctx, std::size_t node_limit) {
  // Every step adds one element, so a layer holds semigroups of equal genus
  // and deduplication per layer is enough.
  std::set<std::vector<bool>> layer{ground_multiple(ctx).membership()};
  std::vector<NumericalSemigroup> found;
  std::size_t nodes = 0;
  while (!layer.empty()) {
    std::set<std::vector<bool>> next;
    for (const auto& bits : layer) {
      if (++nodes > node_limit) {
        fail(Errc::ceiling_exceeded, "max_multiples exceeded its node limit of " + std::to_string(node_limit));
      }
      auto t = NumericalSemigroup::from_membership_unchecked(bits);
      const auto addable = addable_elements(ctx, t);
      if (addable.empty()) {
        found.push_back(std::move(t));
        continue;
      }
      for (Int z : addable) {
        auto grown = bits;
        grown[idx(z)] = true;
        next.insert(std::move(grown));
      }
    }
    layer = std::move(next);
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

MultipleContext::MultipleContext(NumericalSemigroup base, Int d) : base_(std::move(base)), d_(d) {
  if (d < 1) fail(Errc::invalid_input, "d must be a positive integer");
  for (Int h : base_.gaps()) scaled_gaps_.push_back(checked_mul(d, h));
  scaled_frobenius_ = checked_mul(d, base_.frobenius());
  if (scaled_frobenius_ > kMaxFrobenius) fail(Errc::overflow, "d·F(S) exceeds the supported range");
}

NumericalSemigroup quotient(const NumericalSemigroup& t, Int d) {
  if (d < 1) fail(Errc::invalid_input, "d must be a positive integer");
  if (d == 1) return t;
  const Int top = t.frobenius() / d;
  std::vector<bool> member(idx(std::max<Int>(top, 0)) + 1);
  for (Int x = 0; x <= top; ++x) member[idx(x)] = t.contains(d * x);
  return NumericalSemigroup::from_membership_unchecked(std::move(member));
}

bool is_d_multiple(const MultipleContext& ctx, const NumericalSemigroup& t) {
  for (Int h : ctx.scaled_gaps()) {
    if (t.contains(h)) return false;
  }
  for (Int h = 1; h <= t.frobenius(); ++h) {
    if (!t.contains(h) && ctx.in_scaled_base(h)) return false;
  }
  return true;
}

std::vector<Int> addable_elements(const MultipleContext& ctx, const NumericalSemigroup& t) {
  if (t.is_whole()) return {};
  std::vector<Int> out;
  for (Int z : pseudo_frobenius(t)) {
    if (t.contains(2 * z) && !ctx.in_scaled_gaps(z)) out.push_back(z);
  }
  return out;
}

NumericalSemigroup ground_multiple(const MultipleContext& ctx) {
  const Int top = ctx.scaled_frobenius();
  if (top < 0) return NumericalSemigroup();
  std::vector<bool> member(idx(top) + 1);
  for (Int n = 0; n <= top; ++n) member[idx(n)] = ctx.in_scaled_base(n);
  return NumericalSemigroup::from_membership_unchecked(std::move(member));
}

MaxMultiplesResult max_multiples(const MultipleContext& ctx, const MaxMultiplesOptions& options) {
  if (ctx.base().is_whole()) fail(Errc::whole_n, "max M_d(S) requires S ≠ ℕ");
  if (ctx.d() == 1) return {ctx, {ctx.base()}};

  std::vector<NumericalSemigroup> maximals;
  switch (options.strategy) {
    case MaxMultiplesStrategy::kunz: maximals = KunzSearch(ctx, options.node_limit).run(); break;
    case MaxMultiplesStrategy::saturation: maximals = saturation_search(ctx, options.node_limit); break;
  }
  ensure(!maximals.empty(), "max M_d(S) came out empty");
  for (const auto& t : maximals) {
    ensure(t.frobenius() == ctx.scaled_frobenius(), "maximal multiple with Frobenius number other than d·F(S)");
  }
  return {ctx, std::move(maximals)};
}

IrreducibilityTransfer irreducibility_transfer(const MultipleContext& ctx) {
  const bool base = is_irreducible(ctx.base());
  const auto result = max_multiples(ctx);
  const bool all = std::all_of(result.maximals.begin(), result.maximals.end(),
                               [](const NumericalSemigroup& t) { return is_irreducible(t); });
  ensure(base == all, "S irreducible but some maximal multiple is not (or vice versa)");
  return {base, all};
}

}  // namespace numsg
