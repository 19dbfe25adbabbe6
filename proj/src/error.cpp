#include "alcovia/error.hpp"

#include <cstdlib>
#include <string>

namespace alcovia {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::TypeTooLong: return "TypeTooLong";
    case ErrorKind::InvalidWalk: return "InvalidWalk";
    case ErrorKind::NotInSaturatedSet: return "NotInSaturatedSet";
    case ErrorKind::NotReducedWord: return "NotReducedWord";
    case ErrorKind::InternalOperatorDeath: return "InternalOperatorDeath";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Bounds Bounds::from_env() {
  Bounds b;
  if (const char* env = std::getenv("ALCOVIA_MAX_WEYL_ORDER")) {
    try {
      b.max_weyl_order = std::stoull(env);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument,
           std::string("ALCOVIA_MAX_WEYL_ORDER is not an integer: ") + env);
    }
  }
  return b;
}

}  // namespace alcovia
