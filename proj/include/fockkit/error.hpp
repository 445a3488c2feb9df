#pragma once

#include <stdexcept>
#include <string>

namespace fockkit {

// Domain error carrying a stable machine-readable code (surfaced by the CLI
// as {"error": code, "detail": ...}).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

namespace errc {
inline constexpr const char* invalid_argument = "InvalidArgument";
inline constexpr const char* not_nu_regular = "NotNuRegular";
inline constexpr const char* unsupported = "Unsupported";
inline constexpr const char* budget_exceeded = "BudgetExceeded";
inline constexpr const char* not_minimal_coset_rep = "NotMinimalCosetRep";
inline constexpr const char* internal_non_divisible = "InternalNonDivisible";
inline constexpr const char* parse = "ParseError";
}  // namespace errc

[[noreturn]] inline void fail(const char* code, const std::string& detail) {
  throw Error(code, detail);
}

inline void require(bool cond, const std::string& detail) {
  if (!cond) fail(errc::invalid_argument, detail);
}

}  // namespace fockkit
