#include "soleknot/error.hpp"

namespace soleknot {

const char *to_string(Errc code) noexcept {
  switch (code) {
  case Errc::ParseError: return "ParseError";
  case Errc::IndexOutOfRank: return "IndexOutOfRank";
  case Errc::RankMismatch: return "RankMismatch";
  case Errc::StrandsOutOfRange: return "StrandsOutOfRange";
  case Errc::NotAKnot: return "NotAKnot";
  case Errc::CoreMismatch: return "CoreMismatch";
  case Errc::BudgetExceeded: return "BudgetExceeded";
  case Errc::NotInfiniteCyclic: return "NotInfiniteCyclic";
  case Errc::MeridianNotGenerator: return "MeridianNotGenerator";
  case Errc::NotKnotLike: return "NotKnotLike";
  case Errc::MissingPeripheral: return "MissingPeripheral";
  case Errc::WindingTooSmall: return "WindingTooSmall";
  case Errc::DepthExceedsPatterns: return "DepthExceedsPatterns";
  case Errc::DomainError: return "DomainError";
  case Errc::EntryTooSmall: return "EntryTooSmall";
  case Errc::EntryTooLarge: return "EntryTooLarge";
  case Errc::EmptyPeriod: return "EmptyPeriod";
  case Errc::IndexError: return "IndexError";
  case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

} // namespace soleknot
