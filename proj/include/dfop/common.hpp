#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfop {

// ---------------------------------------------------------------------------
// Error taxonomy. Precondition and usage violations throw; negative outcomes
// of searches and checkers are ordinary values (see Report / SearchOutcome).
// ---------------------------------------------------------------------------

enum class ErrorCode {
  MismatchedEndpoints,
  NonCommuting,
  SizeExceeded,
  SiteClosureExceeded,
  ArityExceeded,
  SearchBudgetExceeded,
  MackeyViolation,
  BCViolation,
  CheckFailed,
  MissingLimits,
  ParseError,
  ValidationError,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

// ---------------------------------------------------------------------------
// Canonical tuple rendering. Constructed elements (power-category objects and
// arrows, profunctor fibre tuples, finite-set tuples) all share this naming so
// that structures built along different routes agree on the nose where the
// design demands it (normality, monoid round trips).
// A 1-tuple keeps the bare component name; the empty tuple is "()".
// ---------------------------------------------------------------------------

std::string tuple_name(const std::vector<std::string>& parts);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

// ---------------------------------------------------------------------------
// Mixed-radix helpers for enumerating tuples in lexicographic order with the
// leftmost coordinate most significant. Used by power categories, assembled
// profunctor fibres and tuple-valued finite sets.
// ---------------------------------------------------------------------------

inline std::int64_t radix_total(const std::vector<int>& radices) {
  std::int64_t t = 1;
  for (int r : radices) t *= r;
  return t;
}

// digits of `index` for the given radices; leftmost digit most significant.
std::vector<int> radix_decode(std::int64_t index, const std::vector<int>& radices);

std::int64_t radix_encode(const std::vector<int>& digits, const std::vector<int>& radices);

// ---------------------------------------------------------------------------
// Deterministic pseudo-random source for corpus generation. Thin xorshift so
// streams are reproducible across platforms regardless of libstdc++ details.
// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    return state_ = x;
  }

  // uniform in [0, n)
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  bool coin() { return (next() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Execution policy for checker loops. Parallel uses OpenMP when compiled in;
// Serial is the reference path kept for testing. Results must be identical:
// loop bodies write only to their own index slot.
// ---------------------------------------------------------------------------

enum class Exec { Serial, Parallel };

void parallel_for(std::int64_t n, Exec exec, const std::function<void(std::int64_t)>& body);

}  // namespace dfop
