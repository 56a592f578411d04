#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// A closure or search grew past the caller-supplied budget.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The structure-theorem fast path refused: its hypotheses do not hold.
class HypothesisViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A topology family was given parameters outside its valid range.
class InvalidParams : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group automorphism was expected to map the generator set onto itself.
class NotSFixing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A line-graph automorphism is not induced by any base-graph automorphism.
class NoLift : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed CLI spec string or edge-list input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default budgets.  All are overridable per call (the CLI exposes flags).
inline constexpr std::uint64_t kDefaultGroupCap = 50'000;       // group closure
inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;  // materialized maps
inline constexpr int kDefaultBruteVertexBudget = 1'000;         // brute-force graph size
inline constexpr std::uint64_t kDefaultExtensionBudget = 200'000'000;

}  // namespace cayley
