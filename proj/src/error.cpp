#include "kirchhoff/error.hpp"

namespace kirchhoff {

Error::Error(std::string kind, const std::string& message)
    : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

void fail(const std::string& kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace kirchhoff
