#include "gca/error.hpp"

namespace gca {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::GroupMismatch: return "group-mismatch";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::InfiniteFamily: return "infinite-family";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace gca
