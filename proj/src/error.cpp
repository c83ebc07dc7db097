#include "numsg/error.hpp"

namespace numsg {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_input: return "InvalidInput";
    case Errc::not_numerical: return "NotNumerical";
    case Errc::not_closed: return "NotClosed";
    case Errc::not_member: return "NotMember";
    case Errc::whole_n: return "WholeN";
    case Errc::not_minimal_generator: return "NotMinimalGenerator";
    case Errc::not_adjoinable: return "NotAdjoinable";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::not_a_multiple: return "NotAMultiple";
    case Errc::not_maximal: return "NotMaximal";
    case Errc::bounds_missing: return "BoundsMissing";
    case Errc::not_md_set: return "NotMdSet";
    case Errc::not_in_s: return "NotInS";
    case Errc::d_is_one: return "DIsOne";
    case Errc::not_pairwise_coprime: return "NotPairwiseCoprime";
    case Errc::too_small: return "TooSmall";
    case Errc::ceiling_exceeded: return "CeilingExceeded";
    case Errc::overflow: return "Overflow";
    case Errc::invariant_violation: return "InvariantViolation";
  }
  return "Unknown";
}

NotClosedError::NotClosedError(std::int64_t a, std::int64_t b)
    : Error(Errc::not_closed, "complement of the gap set is not closed: " + std::to_string(a) + " + " +
                                  std::to_string(b) + " is a gap"),
      a_(a),
      b_(b) {}

namespace {
std::string adjoin_message(std::int64_t x, AdjoinFailure reason) {
  switch (reason) {
    case AdjoinFailure::not_a_gap: return std::to_string(x) + " is not a gap";
    case AdjoinFailure::not_pseudo_frobenius: return std::to_string(x) + " is not a pseudo-Frobenius number";
    case AdjoinFailure::double_not_in_s: return "2*" + std::to_string(x) + " is not in the semigroup";
  }
  return "cannot adjoin " + std::to_string(x);
}
}  // namespace

NotAdjoinableError::NotAdjoinableError(std::int64_t x, AdjoinFailure reason)
    : Error(Errc::not_adjoinable, adjoin_message(x, reason)), reason_(reason) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) fail(Errc::overflow, "integer overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) fail(Errc::overflow, "integer overflow in multiplication");
  return out;
}

}  // namespace numsg
