#include "numsg/rank.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace numsg {

namespace {

bool within_multiplicity_bound(const NumericalSemigroup& s) {
  const std::size_t e = s.embedding_dimension();
  if (e < 2) return true;
  if (e - 1 >= 62) return false;
  return s.multiplicity() >= (Int{1} << (e - 1));
}

void require_not_whole(const NumericalSemigroup& s, const char* what) {
  if (s.is_whole()) fail(Errc::whole_n, std::string(what) + " is undefined for S = ℕ");
}

}  // namespace

RankReport full_rank_condition(const NumericalSemigroup& s) {
  require_not_whole(s, "the full-rank condition");
  const auto& gens = s.msg();
  const Int total = std::accumulate(gens.begin(), gens.end(), Int{0}, [](Int a, Int b) { return checked_add(a, b); });

  RankReport report{s, true, {}, within_multiplicity_bound(s)};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Int sum = total - gens[i];
    const bool in_ap = s.contains(sum) && !s.contains(sum - gens[i]);
    report.witnesses.push_back({i, gens[i], sum, in_ap});
    report.condition_holds = report.condition_holds && in_ap;
  }
#if NUMSG_INVARIANT_CHECKS
  if (report.condition_holds) ensure(report.multiplicity_bound_ok, "condition holds but m(S) < 2^(e-1)");
#endif
  return report;
}

UniqueBettiSpec UniqueBettiSpec::create(std::vector<Int> c) {
  if (c.size() < 2) fail(Errc::too_small, "a unique-Betti family needs at least two factors");
  for (Int v : c) {
    if (v < 2) fail(Errc::too_small, "every factor must be at least 2, got " + std::to_string(v));
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (std::gcd(c[i], c[j]) != 1) {
        fail(Errc::not_pairwise_coprime,
             "factors " + std::to_string(c[i]) + " and " + std::to_string(c[j]) + " share a divisor");
      }
    }
  }
  std::vector<Int> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Int p = 1;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j != i) p = checked_mul(p, c[j]);
    }
    out.push_back(p);
  }
  return UniqueBettiSpec(std::move(c), std::move(out));
}

NumericalSemigroup unique_betti(const UniqueBettiSpec& spec) {
  auto s = NumericalSemigroup::from_generators(spec.msg_out());
  auto sorted = spec.msg_out();
  std::sort(sorted.begin(), sorted.end());
  ensure(s.msg() == sorted, "products are not the minimal generators");
#if NUMSG_INVARIANT_CHECKS
  ensure(full_rank_condition(s).condition_holds, "unique-Betti semigroup fails the full-rank condition");
#endif
  return s;
}

std::vector<Int> unique_betti_apery(const UniqueBettiSpec& spec, std::size_t i) {
  const auto& c = spec.c();
  const auto& a = spec.msg_out();
  if (i >= c.size()) fail(Errc::invalid_input, "generator index out of range");

  // Mixed-radix counter over u_j ∈ [0, c_j) for j ≠ i.
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j != i) others.push_back(j);
  }
  std::vector<Int> u(others.size(), 0);
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(a[i]));
  for (;;) {
    Int v = 0;
    for (std::size_t k = 0; k < others.size(); ++k) v = checked_add(v, checked_mul(u[k], a[others[k]]));
    out.push_back(v);
    std::size_t k = 0;
    while (k < others.size() && ++u[k] == c[others[k]]) u[k++] = 0;
    if (k == others.size()) break;
  }
  std::sort(out.begin(), out.end());
  ensure(std::adjacent_find(out.begin(), out.end()) == out.end(), "Apéry representation is not unique");
  ensure(static_cast<Int>(out.size()) == a[i], "|Ap(S, a_i)| differs from a_i");
  return out;
}

std::optional<JSubsetWitness> j_subset_obstruction(const NumericalSemigroup& s) {
  require_not_whole(s, "the J-subset search");
  const auto& a = s.msg();
  const std::size_t e = a.size();
  if (e > 24) fail(Errc::ceiling_exceeded, "J-subset search is capped at embedding dimension 24");

  const std::uint32_t full = (std::uint32_t{1} << e) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Int target = 0;
    std::vector<Int> outside;
    std::vector<std::size_t> outside_index;
    for (std::size_t j = 0; j < e; ++j) {
      if (mask >> j & 1U) {
        target += a[j];
      } else {
        outside.push_back(a[j]);
        outside_index.push_back(j);
      }
    }
    // via[n] = 1 + position in `outside` of the last generator used to reach n.
    std::vector<std::size_t> via(static_cast<std::size_t>(target) + 1, 0);
    std::vector<bool> reach(via.size(), false);
    reach[0] = true;
    for (Int n = 1; n <= target; ++n) {
      for (std::size_t k = 0; k < outside.size(); ++k) {
        if (outside[k] <= n && reach[static_cast<std::size_t>(n - outside[k])]) {
          reach[static_cast<std::size_t>(n)] = true;
          via[static_cast<std::size_t>(n)] = k + 1;
          break;
        }
      }
    }
    if (!reach[static_cast<std::size_t>(target)]) continue;

    JSubsetWitness w{{}, std::vector<Int>(e, 0), target};
    for (std::size_t j = 0; j < e; ++j) {
      if (mask >> j & 1U) w.subset.push_back(j);
    }
    for (Int n = target; n > 0;) {
      const std::size_t k = via[static_cast<std::size_t>(n)] - 1;
      ++w.coefficients[outside_index[k]];
      n -= outside[k];
    }
    return w;
  }
  return std::nullopt;
}

std::optional<LowEMultiple> bounded_low_e_multiple_search(const NumericalSemigroup& s, Int d_max,
                                                          const TruncationBounds& bounds) {
  require_not_whole(s, "the low-e search");
  if (d_max < 1) fail(Errc::invalid_input, "d_max must be positive");
  if (!bounds.any_finite()) fail(Errc::bounds_missing, "the low-e search needs at least one finite bound");

  const std::size_t e = s.embedding_dimension();
  for (Int d = 1; d <= d_max; ++d) {
    MultipleContext ctx(s, d);
    FiberExplorer explorer(ctx);
    std::optional<NumericalSemigroup> best;
    for (const auto& root : max_multiples(ctx).maximals) {
      const auto tree = explorer.enumerate_fiber(root, bounds);
      for (const auto& node : tree.nodes) {
        const auto& t = node.semigroup;
        if (t.embedding_dimension() >= e) continue;
        if (!best || t.genus() < best->genus() || (t.genus() == best->genus() && t < *best)) best = t;
      }
    }
    if (best) {
#if NUMSG_INVARIANT_CHECKS
      ensure(!full_rank_condition(s).condition_holds, "low-e multiple found although the full-rank condition holds");
#endif
      return LowEMultiple{d, std::move(*best)};
    }
  }
  return std::nullopt;
}

std::vector<RankSweepRow> rank_sweep(const RankSweepOptions& options) {
  if (options.max_genus < 1) fail(Errc::invalid_input, "max_genus must be positive");
  std::mt19937_64 rng(options.seed);
  std::vector<RankSweepRow> rows;
  rows.reserve(options.count);
  while (rows.size() < options.count) {
    // Walk down the genus tree: children of S are S ∖ {x} for x ∈ msg(S), x > F(S).
    const Int target = 1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(options.max_genus));
    NumericalSemigroup s;
    while (s.genus() < target) {
      std::vector<Int> kids;
      for (Int x : s.msg()) {
        if (x > s.frobenius()) kids.push_back(x);
      }
      if (kids.empty()) break;
      s = remove_minimal_generator(s, kids[rng() % kids.size()]);
    }
    if (s.is_whole()) continue;
    auto report = full_rank_condition(s);
    const bool obstruction = j_subset_obstruction(s).has_value();
    auto low = bounded_low_e_multiple_search(s, options.d_max, options.search_bounds);
    rows.push_back({s, std::move(report), obstruction, std::move(low)});
  }
  return rows;
}

namespace {

std::string space_joined(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<RankSweepRow>& rows) {
  out << "index,msg,genus,frobenius,multiplicity,embedding_dimension,condition_holds,multiplicity_bound_ok,"
         "j_obstruction,low_e_d,low_e_msg\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto& s = r.semigroup;
    out << i << ',' << space_joined(s.msg()) << ',' << s.genus() << ',' << s.frobenius() << ',' << s.multiplicity()
        << ',' << s.embedding_dimension() << ',' << (r.report.condition_holds ? 1 : 0) << ','
        << (r.report.multiplicity_bound_ok ? 1 : 0) << ',' << (r.obstruction_found ? 1 : 0) << ',';
    if (r.low_e) {
      out << r.low_e->d << ',' << space_joined(r.low_e->multiple.msg());
    } else {
      out << ',';
    }
    out << '\n';
  }
}

}  // namespace numsg
