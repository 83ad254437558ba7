#include "redspec/error.hpp"

namespace redspec {

std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::GridMismatch: return "grid-mismatch";
    case ErrorKind::Horizon: return "horizon";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Division: return "division";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Tail: return "tail";
    case ErrorKind::Growth: return "growth";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace redspec
