#include "caspol/error.hpp"

namespace caspol {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::TooCloseToWall: return "TooCloseToWall";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::TailBoundViolated: return "TailBoundViolated";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
  }
  return "UnknownError";
}

}  // namespace caspol
