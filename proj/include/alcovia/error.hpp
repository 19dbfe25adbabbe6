#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace alcovia {

enum class ErrorKind {
  UnknownType,
  RankOutOfRange,
  IndexOutOfRange,
  NotDominant,
  GroupTooLarge,
  TypeTooLong,
  InvalidWalk,
  NotInSaturatedSet,
  NotReducedWord,
  InternalOperatorDeath,
  SingularPoint,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

/// Resource limits shared by every enumeration in the library.
struct Bounds {
  /// Longest walk type (number of letters) that enumeration accepts.
  int max_letters = 24;
  /// Largest |W0| for operations that enumerate the whole finite Weyl group.
  std::uint64_t max_weyl_order = 51840;

  /// Defaults, with ALCOVIA_MAX_WEYL_ORDER overriding the group-size guard.
  static Bounds from_env();
};

}  // namespace alcovia
