#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace soleknot {

enum class Errc {
  ParseError,
  IndexOutOfRank,
  RankMismatch,
  StrandsOutOfRange,
  NotAKnot,
  CoreMismatch,
  BudgetExceeded,
  NotInfiniteCyclic,
  MeridianNotGenerator,
  NotKnotLike,
  MissingPeripheral,
  WindingTooSmall,
  DepthExceedsPatterns,
  DomainError,
  EntryTooSmall,
  EntryTooLarge,
  EmptyPeriod,
  IndexError,
  InvalidArgument,
};

const char *to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string &message)
      : Error(Errc::ParseError,
              message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace soleknot
