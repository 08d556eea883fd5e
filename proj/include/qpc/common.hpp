#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpc {

// Element of GF(q), stored as its enumeration index in [0, q).
using Elem = std::uint16_t;

// Default resource caps. All of them are overridable at call sites and from
// the CLI; exceeding a cap is a deterministic refusal, never a partial scan.
inline constexpr std::uint64_t kDefaultLeaderCap = 1ull << 26;     // syndrome table entries
inline constexpr std::uint64_t kDefaultEnumCap = 1ull << 24;       // enumerated codewords
inline constexpr std::uint64_t kDefaultPairBudget = 10'000'000;    // codeword pairs
inline constexpr std::uint64_t kDefaultAmbientBudget = 1'000'000'000;  // distance evaluations

// A requested scan or table does not fit the configured budget.
class BudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed file contents or command arguments.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// base^exp in exact 64-bit arithmetic; throws std::overflow_error on overflow.
std::uint64_t ipow_checked(std::uint64_t base, std::uint64_t exp);

}  // namespace qpc
