#include "numsg/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace numsg {

namespace {

std::size_t idx(Int x) { return static_cast<std::size_t>(x); }

void require_positive(std::span<const Int> values, const char* what) {
  for (Int v : values) {
    if (v <= 0) fail(Errc::invalid_input, std::string(what) + " must be positive, got " + std::to_string(v));
  }
}

}  // namespace

Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

NumericalSemigroup::NumericalSemigroup() : msg_{1} {}

NumericalSemigroup::NumericalSemigroup(std::vector<bool> member, Int genus, std::vector<Int> msg)
    : member_(std::move(member)), frobenius_(static_cast<Int>(member_.size()) - 1), genus_(genus), msg_(std::move(msg)) {}

NumericalSemigroup::NumericalSemigroup(std::vector<bool> member) : member_(std::move(member)) {
  while (!member_.empty() && member_.back()) member_.pop_back();
  frobenius_ = static_cast<Int>(member_.size()) - 1;
  genus_ = static_cast<Int>(std::count(member_.begin(), member_.end(), false));
  if (is_whole()) {
    msg_ = {1};
    return;
  }

  Int m = 1;
  while (!contains(m)) ++m;

  // Apéry set with respect to the multiplicity; minimal generators other than
  // m are the ⪯_S-minimal nonzero elements of it.
  std::vector<Int> apery_set(idx(m), -1);
  apery_set[0] = 0;
  Int found = 1;
  for (Int n = 1; found < m; ++n) {
    if (contains(n) && apery_set[idx(n % m)] < 0) {
      apery_set[idx(n % m)] = n;
      ++found;
    }
  }
  msg_.push_back(m);
  for (Int r = 1; r < m; ++r) {
    const Int w = apery_set[idx(r)];
    bool decomposes = false;
    for (Int s = 1; s < m && !decomposes; ++s) {
      if (s == r) continue;
      const Int other = apery_set[idx(s)];
      decomposes = other < w && contains(w - other);
    }
    if (!decomposes) msg_.push_back(w);
  }
  std::sort(msg_.begin(), msg_.end());
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> gens) {
  if (gens.empty()) fail(Errc::invalid_input, "generator list is empty");
  require_positive(gens, "generators");
  if (gcd_of(gens) != 1) fail(Errc::not_numerical, "gcd of the generators is not 1");

  const Int m = *std::min_element(gens.begin(), gens.end());
  if (m == 1) return NumericalSemigroup();

  // Apéry set of m: shortest paths over the residues mod m.
  constexpr Int unreached = std::numeric_limits<Int>::max();
  std::vector<Int> ap(idx(m), unreached);
  ap[0] = 0;
  using Entry = std::pair<Int, Int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    const auto [w, r] = queue.top();
    queue.pop();
    if (w != ap[idx(r)]) continue;
    for (Int g : gens) {
      const Int next = w + g;
      if (next > kMaxFrobenius + m) fail(Errc::overflow, "Frobenius number exceeds the supported range");
      const Int rr = next % m;
      if (next < ap[idx(rr)]) {
        ap[idx(rr)] = next;
        queue.emplace(next, rr);
      }
    }
  }

  const Int f = *std::max_element(ap.begin(), ap.end()) - m;
  std::vector<bool> member(idx(f) + 1, false);
  Int genus = 0;
  for (Int r = 0; r < m; ++r) {
    genus += (ap[idx(r)] - r) / m;
    for (Int n = ap[idx(r)]; n <= f; n += m) member[idx(n)] = true;
  }

  // g is decomposable iff g - a ∈ S for some smaller generator a.
  std::vector<Int> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto in_s = [&](Int n) { return n >= ap[idx(n % m)]; };
  std::vector<Int> msg;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    bool decomposes = false;
    for (std::size_t j = 0; j < i && !decomposes; ++j) decomposes = in_s(sorted[i] - sorted[j]);
    if (!decomposes) msg.push_back(sorted[i]);
  }
  return NumericalSemigroup(std::move(member), genus, std::move(msg));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const Int> gaps) {
  if (gaps.empty()) return NumericalSemigroup();
  require_positive(gaps, "gaps");
  const Int f = *std::max_element(gaps.begin(), gaps.end());
  if (f > kMaxFrobenius) fail(Errc::overflow, "Frobenius number exceeds the supported range");
  std::vector<bool> member(idx(f) + 1, true);
  for (Int h : gaps) member[idx(h)] = false;
  return from_membership(std::move(member));
}

NumericalSemigroup NumericalSemigroup::from_membership(std::vector<bool> member) {
  if (member.empty()) return NumericalSemigroup();
  if (!member[0]) fail(Errc::invalid_input, "0 must be a member");
  const Int top = static_cast<Int>(member.size()) - 1;
  std::vector<Int> elements;
  for (Int n = 1; n <= top; ++n) {
    if (member[idx(n)]) elements.push_back(n);
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i; j < elements.size(); ++j) {
      const Int sum = elements[i] + elements[j];
      if (sum > top) break;
      if (!member[idx(sum)]) throw NotClosedError(elements[i], elements[j]);
    }
  }
  return NumericalSemigroup(std::move(member));
}

NumericalSemigroup NumericalSemigroup::from_membership_unchecked(std::vector<bool> member) {
  if (member.empty()) return NumericalSemigroup();
  return NumericalSemigroup(std::move(member));
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  out.reserve(idx(genus_));
  for (Int n = 1; n <= frobenius_; ++n) {
    if (!member_[idx(n)]) out.push_back(n);
  }
  return out;
}

bool NumericalSemigroup::is_minimal_generator(Int x) const {
  return std::binary_search(msg_.begin(), msg_.end(), x);
}

bool NumericalSemigroup::is_subset_of(const NumericalSemigroup& other) const {
  for (Int n = 1; n <= other.frobenius_; ++n) {
    if (!other.contains(n) && contains(n)) return false;
  }
  return true;
}

PartialOrderWitness compare_in(const NumericalSemigroup& s, Int x, Int y) {
  return {x, y, s.contains(y - x)};
}

std::vector<Int> apery(const NumericalSemigroup& s, Int x) {
  if (x <= 0 || !s.contains(x)) {
    fail(Errc::not_member, std::to_string(x) + " is not a nonzero element of the semigroup");
  }
  checked_add(s.frobenius(), x);
  // Least member of each residue class mod x.
  std::vector<Int> out;
  out.reserve(idx(x));
  for (Int r = 0; r < x; ++r) {
    Int n = r;
    while (!s.contains(n)) n += x;
    out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s) {
  if (s.is_whole()) fail(Errc::whole_n, "pseudo-Frobenius numbers are undefined for ℕ");
  std::vector<Int> out;
  for (Int z : s.gaps()) {
    const bool pf = std::all_of(s.msg().begin(), s.msg().end(), [&](Int a) { return s.contains(z + a); });
    if (pf) out.push_back(z);
  }
  return out;
}

Int type(const NumericalSemigroup& s) { return static_cast<Int>(pseudo_frobenius(s).size()); }

bool is_irreducible(const NumericalSemigroup& s) {
  if (s.is_whole()) fail(Errc::whole_n, "irreducibility is undefined for ℕ");
  return s.genus() == (s.frobenius() + 2) / 2;
}

bool is_symmetric(const NumericalSemigroup& s) { return is_irreducible(s) && s.frobenius() % 2 == 1; }

bool is_pseudo_symmetric(const NumericalSemigroup& s) { return is_irreducible(s) && s.frobenius() % 2 == 0; }

NumericalSemigroup remove_minimal_generator(const NumericalSemigroup& s, Int x) {
  if (!s.is_minimal_generator(x)) {
    fail(Errc::not_minimal_generator, std::to_string(x) + " is not a minimal generator");
  }
  std::vector<bool> member = s.membership();
  if (x >= static_cast<Int>(member.size())) member.resize(idx(x) + 1, true);
  member[idx(x)] = false;
  return NumericalSemigroup::from_membership_unchecked(std::move(member));
}

NumericalSemigroup adjoin(const NumericalSemigroup& s, Int x) {
  if (x <= 0 || s.contains(x)) throw NotAdjoinableError(x, AdjoinFailure::not_a_gap);
  for (Int a : s.msg()) {
    if (!s.contains(x + a)) throw NotAdjoinableError(x, AdjoinFailure::not_pseudo_frobenius);
  }
  if (!s.contains(2 * x)) throw NotAdjoinableError(x, AdjoinFailure::double_not_in_s);
  std::vector<bool> member = s.membership();
  member[idx(x)] = true;
  return NumericalSemigroup::from_membership_unchecked(std::move(member));
}

NumericalSemigroup intersect(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  const Int top = std::max(a.frobenius(), b.frobenius());
  std::vector<bool> member(idx(top + 1));
  for (Int n = 0; n <= top; ++n) member[idx(n)] = a.contains(n) && b.contains(n);
  return NumericalSemigroup::from_membership_unchecked(std::move(member));
}

FrobeniusGenus brauer_step(Int a1, std::span<const Int> rest) {
  if (a1 <= 0) fail(Errc::invalid_input, "a1 must be positive");
  require_positive(rest, "generators");
  const Int b = gcd_of(rest);
  if (std::gcd(a1, b) != 1) fail(Errc::not_coprime, "gcd of all generators is not 1");

  if (b <= 1) {
    std::vector<Int> gens(rest.begin(), rest.end());
    gens.push_back(a1);
    const auto s = NumericalSemigroup::from_generators(gens);
    return {s.frobenius(), s.genus()};
  }
  std::vector<Int> reduced;
  reduced.reserve(rest.size());
  for (Int v : rest) reduced.push_back(v / b);
  const auto inner = brauer_step(a1, reduced);
  // gcd(a1, b) = 1 makes (b-1)(a1-1) even.
  const Int frobenius = checked_add(checked_mul(b - 1, a1), checked_mul(b, inner.frobenius));
  const Int genus = checked_add(checked_mul(b - 1, a1 - 1) / 2, checked_mul(b, inner.genus));
  return {frobenius, genus};
}

}  // namespace numsg
