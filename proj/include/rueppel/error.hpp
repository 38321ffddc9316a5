#ifndef RUEPPEL_ERROR_HPP
#define RUEPPEL_ERROR_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rueppel {

enum class Errc {
  InexactDivision,
  DivisionByZero,
  ZeroDenominator,
  DegreeBoundExceeded,
  RingMismatch,
  NonUnitConstantTerm,
  InsufficientTerms,
  InsufficientTruncation,
  InsufficientDepth,
  NonSquare,
  SFractionBreakdown,
  BadOrder,
  UnexpectedVariable,
  BadLeadingTerm,
  TooSmall,
  UnknownSequence,
  UnknownCheck,
  DepthInfeasible,
  FixtureMissing,
  NetworkUnavailable,
  ParseError,
  EmptyOverlap,
  NonIntegral,
  Usage,
};

std::string_view errc_name(Errc code) noexcept;

/// Every library failure is reported through this exception. `where()` carries
/// the step, line or index the error refers to, when one exists.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::int64_t> where = std::nullopt)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), where_(where) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::int64_t> where() const noexcept { return where_; }

 private:
  Errc code_;
  std::optional<std::int64_t> where_;
};

}  // namespace rueppel

#endif  // RUEPPEL_ERROR_HPP
