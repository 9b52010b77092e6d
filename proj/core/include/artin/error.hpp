#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace artin {

enum class Errc {
  DomainMismatch,
  DivisionByZero,
  NotDivisible,
  NotAUnit,
  UnsupportedDomain,
  ParseError,
  SeedTooShort,
  NonInvertibleExtremes,
  WindowTooSmall,
  NotStabilized,
  InvalidRank,
  InvalidLabel,
  NotFiniteType,
  GroupTooLarge,
  InfiniteGroup,
  MissingEntry,
  CocycleViolation,
  NotSubsetIndexed,
  IndexOutOfRange,
  RankMismatch,
  NotWellFiltered,
  InputError,
};

std::string_view errc_name(Errc code) noexcept;

/// Exception type for every failure raised by the library. The code names
/// the violated contract; the message carries the specifics.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace artin
