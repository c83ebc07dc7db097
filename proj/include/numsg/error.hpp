#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace numsg {

enum class Errc {
  invalid_input,
  not_numerical,
  not_closed,
  not_member,
  whole_n,
  not_minimal_generator,
  not_adjoinable,
  not_coprime,
  not_a_multiple,
  not_maximal,
  bounds_missing,
  not_md_set,
  not_in_s,
  d_is_one,
  not_pairwise_coprime,
  too_small,
  ceiling_exceeded,
  overflow,
  invariant_violation,
};

std::string_view to_string(Errc code) noexcept;

/// Base error for every failure reported by the library. The code is stable
/// and drives the CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by from_gaps / from_membership when the complement is not closed
/// under addition; (a, b) are members whose sum is a listed gap.
class NotClosedError : public Error {
 public:
  NotClosedError(std::int64_t a, std::int64_t b);
  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }

 private:
  std::int64_t a_;
  std::int64_t b_;
};

enum class AdjoinFailure { not_a_gap, not_pseudo_frobenius, double_not_in_s };

class NotAdjoinableError : public Error {
 public:
  NotAdjoinableError(std::int64_t x, AdjoinFailure reason);
  AdjoinFailure reason() const noexcept { return reason_; }

 private:
  AdjoinFailure reason_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

/// Checks an internal invariant; a false condition is a library bug.
inline void ensure(bool condition, const char* what) {
  if (!condition) fail(Errc::invariant_violation, what);
}

// Overflow-checked 64-bit arithmetic. Wraparound is never silent.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace numsg

#ifndef NUMSG_INVARIANT_CHECKS
#define NUMSG_INVARIANT_CHECKS 1
#endif
