#include "numsg/ed1.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "numsg/fibers.hpp"

namespace numsg {

namespace {

std::vector<Int> with_scaled_msg(const MultipleContext& ctx, std::initializer_list<Int> extra) {
  std::vector<Int> gens(extra);
  for (Int a : ctx.base().msg()) gens.push_back(checked_mul(ctx.d(), a));
  return gens;
}

}  // namespace

Ed1Multiple construct_ed1(const MultipleContext& ctx, Int x) {
  if (x <= 0 || !ctx.base().contains(x)) fail(Errc::not_in_s, std::to_string(x) + " is not a nonzero element of S");
  if (std::gcd(x, ctx.d()) != 1) fail(Errc::not_coprime, "gcd(x, d) must be 1");
  auto t = NumericalSemigroup::from_generators(with_scaled_msg(ctx, {x}));
#if NUMSG_INVARIANT_CHECKS
  ensure(is_d_multiple(ctx, t), "⟨x⟩ + d·S is not a d-multiple of S");
  if (ctx.d() > 1) {
    Int least = 1;
    while (!t.contains(least) || ctx.in_scaled_base(least)) ++least;
    ensure(least == x, "x is not min(T ∖ d·S)");
  }
#endif
  return Ed1Multiple(ctx, x, std::move(t));
}

Int ed1_frobenius(const Ed1Multiple& m) {
  const auto& ctx = m.context();
  const Int value = checked_add(checked_mul(ctx.d() - 1, m.x()), ctx.scaled_frobenius());
#if NUMSG_INVARIANT_CHECKS
  ensure(value == m.semigroup().frobenius(), "Frobenius formula disagrees with the materialized semigroup");
#endif
  return value;
}

Int ed1_genus(const Ed1Multiple& m) {
  const auto& ctx = m.context();
  const Int twice = checked_mul(ctx.d() - 1, m.x() - 1);
  ensure(twice % 2 == 0, "(d-1)(x-1) is odd although gcd(x, d) = 1");
  const Int value = checked_add(twice / 2, checked_mul(ctx.d(), ctx.base().genus()));
#if NUMSG_INVARIANT_CHECKS
  ensure(value == m.semigroup().genus(), "genus formula disagrees with the materialized semigroup");
#endif
  return value;
}

std::vector<Int> ed1_pseudo_frobenius(const Ed1Multiple& m) {
  const auto& ctx = m.context();
  if (ctx.base().is_whole()) fail(Errc::whole_n, "PF is undefined for S = ℕ");
  const Int shift = checked_mul(ctx.d() - 1, m.x());
  std::vector<Int> out;
  for (Int f : pseudo_frobenius(ctx.base())) out.push_back(checked_add(checked_mul(ctx.d(), f), shift));
  std::sort(out.begin(), out.end());
#if NUMSG_INVARIANT_CHECKS
  ensure(out == pseudo_frobenius(m.semigroup()), "PF formula disagrees with the materialized semigroup");
#endif
  return out;
}

NumericalSemigroup ed1_theta_closure(const Ed1Multiple& m) {
  const auto& ctx = m.context();
  if (ctx.d() < 2) fail(Errc::d_is_one, "θ is undefined on M_1(S) = {S}");
  auto closure = NumericalSemigroup::from_generators(with_scaled_msg(ctx, {m.x(), ed1_frobenius(m)}));
#if NUMSG_INVARIANT_CHECKS
  if (!ctx.base().is_whole()) {
    const auto th = theta(ctx, m.semigroup());
    ensure(th.has_value() && adjoin(m.semigroup(), *th) == closure, "T ∪ {θ(T)} disagrees with the closed form");
  }
#endif
  return closure;
}

bool is_gluing_of_N_and_S(const Ed1Multiple& m) {
  return m.context().d() >= 2 && !m.context().base().is_minimal_generator(m.x());
}

SymmetryTransfer ed1_symmetry_transfer(const Ed1Multiple& m) {
  const auto& base = m.context().base();
  if (base.is_whole()) fail(Errc::whole_n, "symmetry is undefined for S = ℕ");
  const SymmetryTransfer out{is_symmetric(base), is_symmetric(m.semigroup())};
  ensure(out.base_symmetric == out.multiple_symmetric, "symmetry not preserved by ⟨x⟩ + d·S");
  return out;
}

}  // namespace numsg
