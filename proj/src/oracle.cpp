#include "numsg/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace numsg::oracle {

namespace {

using Bits = std::vector<char>;

// 1 = member, 0 = gap, over [0, f].
NumericalSemigroup materialize(const Bits& bits) {
  std::vector<bool> member(bits.begin(), bits.end());
  return NumericalSemigroup::from_membership(std::move(member));
}

bool is_sum_of_members(const Bits& bits, Int n) {
  for (Int a = 1; 2 * a <= n; ++a) {
    if (bits[static_cast<std::size_t>(a)] && bits[static_cast<std::size_t>(n - a)]) return true;
  }
  return false;
}

enum class Status : char { free, member, gap };

struct Descent {
  Int f;
  std::vector<Status> required;  // per n in [0, f]
  Int max_genus;
  std::size_t node_limit;
  std::size_t nodes = 0;
  bool stop_at_first = false;
  bool gap_first = false;
  Bits bits{};
  Int gaps = 1;  // f itself
  std::vector<NumericalSemigroup> out{};

  void run() {
    bits.assign(static_cast<std::size_t>(f) + 1, 0);
    bits[0] = 1;
    if (gaps <= max_genus) step(1);
  }

  void step(Int n) {
    if (++nodes > node_limit) fail(Errc::ceiling_exceeded, "oracle node limit exceeded");
    if (stop_at_first && !out.empty()) return;
    if (n == f) {
      out.push_back(materialize(bits));
      return;
    }
    const auto i = static_cast<std::size_t>(n);
    const bool forced = is_sum_of_members(bits, n);
    // n may be a member unless f - n is already a member (or f = 2n).
    const bool member_ok = required[i] != Status::gap && !bits[static_cast<std::size_t>(f - n)] && 2 * n != f;
    const bool gap_ok = required[i] != Status::member && !forced && gaps < max_genus;
    if (forced && !member_ok) return;
    if (gap_first && gap_ok) take_gap(n);
    if (member_ok) {
      bits[i] = 1;
      step(n + 1);
      bits[i] = 0;
    }
    if (!gap_first && gap_ok) take_gap(n);
  }

  void take_gap(Int n) {
    ++gaps;
    step(n + 1);
    --gaps;
  }
};

void sort_canonical(std::vector<NumericalSemigroup>& v) { std::sort(v.begin(), v.end()); }

}  // namespace

Int oracle_ceiling() {
  if (const char* env = std::getenv("NUMSGPS_ORACLE_CEILING")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    fail(Errc::invalid_input, "NUMSGPS_ORACLE_CEILING must be a positive integer");
  }
  return 20;
}

std::vector<NumericalSemigroup> all_with_frobenius(Int f) {
  if (f < 1) fail(Errc::invalid_input, "Frobenius number must be positive");
  if (f > oracle_ceiling()) {
    fail(Errc::ceiling_exceeded, "f = " + std::to_string(f) + " is above the oracle ceiling " +
                                     std::to_string(oracle_ceiling()));
  }
  Descent run{f, std::vector<Status>(static_cast<std::size_t>(f) + 1, Status::free), f, static_cast<std::size_t>(-1)};
  run.run();
  sort_canonical(run.out);
  return run.out;
}

std::vector<NumericalSemigroup> all_with_frobenius_by_tree(Int f) {
  if (f < 1) fail(Errc::invalid_input, "Frobenius number must be positive");
  if (f > oracle_ceiling()) fail(Errc::ceiling_exceeded, "f is above the oracle ceiling");

  struct Node {
    Bits bits;  // over [0, f]
    Int frob;
  };
  std::vector<NumericalSemigroup> out;
  std::vector<Node> stack{{Bits(static_cast<std::size_t>(f) + 1, 1), -1}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (node.frob == f) {
      out.push_back(materialize(node.bits));
      continue;
    }
    // Descendants have larger Frobenius numbers, so only x ≤ f matter.
    for (Int x = node.frob + 1; x <= f; ++x) {
      if (x == 0 || is_sum_of_members(node.bits, x)) continue;
      Node child{node.bits, x};
      child.bits[static_cast<std::size_t>(x)] = 0;
      stack.push_back(std::move(child));
    }
  }
  sort_canonical(out);
  return out;
}

std::vector<NumericalSemigroup> all_up_to_frobenius(Int f) {
  std::vector<NumericalSemigroup> out;
  for (Int k = 1; k <= f; ++k) {
    auto level = all_with_frobenius(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  sort_canonical(out);
  return out;
}

std::vector<NumericalSemigroup> all_multiples_bounded(const MultipleContext& ctx, const EnumerationBudget& budget) {
  const auto& s = ctx.base();
  const Int d = ctx.d();
  auto base_member = [&](Int n) { return n >= 0 && (s.frobenius() < 0 || n > s.frobenius() || s.membership()[static_cast<std::size_t>(n)]); };

  std::vector<NumericalSemigroup> out;
  std::size_t nodes = 0;
  if (s.is_whole()) out.emplace_back();
  for (Int f = 1; f <= budget.max_frobenius; ++f) {
    std::vector<Status> req(static_cast<std::size_t>(f) + 1, Status::free);
    bool possible = true;
    for (Int n = d; n <= f + d * (s.frobenius() + 1); n += d) {
      const bool in_base = base_member(n / d);
      if (n <= f) {
        req[static_cast<std::size_t>(n)] = in_base ? Status::member : Status::gap;
      } else if (!in_base) {
        possible = false;  // a required gap above f
      }
    }
    if (!possible || req[static_cast<std::size_t>(f)] == Status::member) continue;
    Descent run{f, std::move(req), budget.max_genus, budget.hard_node_limit - nodes};
    run.run();
    nodes += run.nodes;
    out.insert(out.end(), run.out.begin(), run.out.end());
  }
  sort_canonical(out);
  return out;
}

bool exists_multiple_containing(const MultipleContext& ctx, std::span<const Int> x, std::size_t node_limit) {
  const auto& s = ctx.base();
  if (s.is_whole()) return true;
  const Int f = ctx.scaled_frobenius();
  std::vector<Status> req(static_cast<std::size_t>(f) + 1, Status::free);
  for (Int n = ctx.d(); n <= f; n += ctx.d()) {
    req[static_cast<std::size_t>(n)] = s.contains(n / ctx.d()) ? Status::member : Status::gap;
  }
  // Close X ∪ d·S inside [0, f] first; a required gap in the closure rules
  // out every T at once instead of after an exponential descent.
  Bits closed(static_cast<std::size_t>(f) + 1, 0);
  closed[0] = 1;
  for (Int n = 1; n <= f; ++n) {
    bool hit = req[static_cast<std::size_t>(n)] == Status::member;
    for (Int v : x) {
      if (v < 0) fail(Errc::invalid_input, "negative element");
      hit = hit || v == n;
    }
    for (Int a = 1; 2 * a <= n && !hit; ++a) hit = closed[static_cast<std::size_t>(a)] && closed[static_cast<std::size_t>(n - a)];
    if (!hit) continue;
    if (req[static_cast<std::size_t>(n)] == Status::gap || n == f) return false;
    closed[static_cast<std::size_t>(n)] = 1;
    req[static_cast<std::size_t>(n)] = Status::member;
  }
  Descent run{f, std::move(req), f, node_limit};
  run.stop_at_first = true;
  run.gap_first = true;
  run.run();
  return !run.out.empty();
}

std::vector<Int> brute_minimal_md_system(const MultipleContext& ctx, std::span<const Int> elements, Int bound) {
  Bits target(static_cast<std::size_t>(bound) + 1, 0);
  for (Int v : elements) {
    if (v >= 0 && v <= bound) target[static_cast<std::size_t>(v)] = 1;
  }
  // Elements of d·S never belong to a minimum-size X: dropping them leaves
  // ⟨X⟩ + d·S unchanged.
  std::vector<Int> pool;
  for (Int v = 1; v <= bound; ++v) {
    if (target[static_cast<std::size_t>(v)] && !ctx.in_scaled_base(v)) pool.push_back(v);
  }
  std::vector<Int> scaled;
  for (Int v = ctx.d(); v <= bound; v += ctx.d()) {
    if (ctx.in_scaled_base(v)) scaled.push_back(v);
  }

  auto generates = [&](const std::vector<Int>& x) {
    Bits reach(target.size(), 0);
    reach[0] = 1;
    for (Int n = 1; n <= bound; ++n) {
      bool hit = false;
      for (Int g : x) hit = hit || (g <= n && reach[static_cast<std::size_t>(n - g)]);
      for (Int g : scaled) hit = hit || (g <= n && reach[static_cast<std::size_t>(n - g)]);
      reach[static_cast<std::size_t>(n)] = hit;
    }
    return reach == target;
  };

  std::size_t tried = 0;
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      if (++tried > 20'000'000) fail(Errc::ceiling_exceeded, "subset search too large");
      std::vector<Int> x;
      for (std::size_t i : idx) x.push_back(pool[i]);
      if (generates(x)) return x;
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  fail(Errc::invalid_input, "elements do not form an M_d(S)-monoid up to the bound");
}

std::vector<Int> brute_apery(const NumericalSemigroup& s, Int x) {
  if (x <= 0 || !s.contains(x)) fail(Errc::not_member, "x must be a nonzero element");
  std::vector<Int> out;
  for (Int y = 0; y <= s.frobenius() + x; ++y) {
    if (s.contains(y) && !s.contains(y - x)) out.push_back(y);
  }
  return out;
}

std::vector<Int> brute_pseudo_frobenius(const NumericalSemigroup& s) {
  if (s.is_whole()) fail(Errc::whole_n, "PF(ℕ) is undefined");
  std::vector<Int> out;
  for (Int z = 1; z <= s.frobenius(); ++z) {
    if (s.contains(z)) continue;
    bool ok = true;
    for (Int a = 1; a <= s.frobenius() && ok; ++a) ok = !s.contains(a) || s.contains(z + a);
    if (ok) out.push_back(z);
  }
  return out;
}

std::vector<Int> brute_msg(const NumericalSemigroup& s) {
  std::vector<Int> out;
  Int first = 1;
  while (!s.contains(first)) ++first;
  for (Int n = 1; n <= s.frobenius() + first + 1; ++n) {
    if (!s.contains(n)) continue;
    bool decomposable = false;
    for (Int a = 1; 2 * a <= n && !decomposable; ++a) decomposable = s.contains(a) && s.contains(n - a);
    if (!decomposable) out.push_back(n);
  }
  return out;
}

bool brute_is_irreducible(const NumericalSemigroup& s) {
  if (s.is_whole()) fail(Errc::whole_n, "irreducibility of ℕ is undefined");
  for (const auto& t : all_with_frobenius(s.frobenius())) {
    if (t == s) continue;
    bool contains_s = true;
    for (Int n = 1; n <= s.frobenius() && contains_s; ++n) contains_s = !s.contains(n) || t.contains(n);
    if (contains_s) return false;
  }
  return true;
}

NumericalSemigroup brute_quotient(const NumericalSemigroup& t, Int d) {
  if (d < 1) fail(Errc::invalid_input, "d must be positive");
  std::vector<bool> member;
  for (Int x = 0; d * x <= t.frobenius(); ++x) member.push_back(t.contains(d * x));
  return NumericalSemigroup::from_membership(std::move(member));
}

}  // namespace numsg::oracle
