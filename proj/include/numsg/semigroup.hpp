#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "numsg/error.hpp"

namespace numsg {

using Int = std::int64_t;

/// Largest Frobenius number the closure routines will materialize.
inline constexpr Int kMaxFrobenius = Int{1} << 26;

Int gcd_of(std::span<const Int> values);

/// A numerical semigroup stored as its membership bit-vector over [0, F].
/// Everything above F is a member. The value is immutable and canonical:
/// two semigroups compare equal iff their gap sets are equal.
class NumericalSemigroup {
 public:
  /// The whole of ℕ.
  NumericalSemigroup();

  static NumericalSemigroup from_generators(std::span<const Int> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()));
  }
  static NumericalSemigroup from_gaps(std::span<const Int> gaps);
  static NumericalSemigroup from_gaps(std::initializer_list<Int> gaps) {
    return from_gaps(std::span<const Int>(gaps.begin(), gaps.size()));
  }

  /// `member[i]` says whether i belongs to the semigroup; positions past the
  /// end are members. Throws NotClosedError when the set is not additively
  /// closed and InvalidInput when member[0] is false.
  static NumericalSemigroup from_membership(std::vector<bool> member);
  /// Same, without the closure check. Caller guarantees closure.
  static NumericalSemigroup from_membership_unchecked(std::vector<bool> member);

  bool contains(Int x) const noexcept {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return member_[static_cast<std::size_t>(x)];
  }

  Int frobenius() const noexcept { return frobenius_; }
  Int conductor() const noexcept { return frobenius_ + 1; }
  Int genus() const noexcept { return genus_; }
  Int multiplicity() const noexcept { return msg_.front(); }
  std::size_t embedding_dimension() const noexcept { return msg_.size(); }
  bool is_whole() const noexcept { return frobenius_ < 0; }

  const std::vector<Int>& msg() const noexcept { return msg_; }
  std::vector<Int> gaps() const;
  bool is_minimal_generator(Int x) const;

  /// Membership over [0, F]; empty for ℕ.
  const std::vector<bool>& membership() const noexcept { return member_; }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.member_ == b.member_;
  }
  /// Canonical order: lexicographic on the sorted minimal generators.
  friend std::strong_ordering operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.msg_ <=> b.msg_;
  }

  bool is_subset_of(const NumericalSemigroup& other) const;

 private:
  explicit NumericalSemigroup(std::vector<bool> member);
  NumericalSemigroup(std::vector<bool> member, Int genus, std::vector<Int> msg);

  std::vector<bool> member_;
  Int frobenius_ = -1;
  Int genus_ = 0;
  std::vector<Int> msg_;
};

/// x ⪯_S y iff y - x ∈ S.
struct PartialOrderWitness {
  Int x;
  Int y;
  bool difference_in_S;
};

PartialOrderWitness compare_in(const NumericalSemigroup& s, Int x, Int y);

std::vector<Int> apery(const NumericalSemigroup& s, Int x);
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s);
Int type(const NumericalSemigroup& s);

bool is_irreducible(const NumericalSemigroup& s);
bool is_symmetric(const NumericalSemigroup& s);
bool is_pseudo_symmetric(const NumericalSemigroup& s);

NumericalSemigroup remove_minimal_generator(const NumericalSemigroup& s, Int x);
NumericalSemigroup adjoin(const NumericalSemigroup& s, Int x);
NumericalSemigroup intersect(const NumericalSemigroup& a, const NumericalSemigroup& b);

struct FrobeniusGenus {
  Int frobenius;
  Int genus;
  friend bool operator==(const FrobeniusGenus&, const FrobeniusGenus&) = default;
};

/// Frobenius number and genus of ⟨a1, rest⟩ through the gcd reduction
/// F = (b-1)a1 + b F(⟨a1, rest/b⟩), g = (b-1)(a1-1)/2 + b g(⟨a1, rest/b⟩)
/// where b = gcd(rest), recursing until b = 1.
FrobeniusGenus brauer_step(Int a1, std::span<const Int> rest);

}  // namespace numsg

template <>
struct std::hash<numsg::NumericalSemigroup> {
  std::size_t operator()(const numsg::NumericalSemigroup& s) const noexcept {
    return std::hash<std::vector<bool>>{}(s.membership());
  }
};
