#pragma once

#include <stdexcept>
#include <string>

namespace kirchhoff {

/// Exception carrying a stable machine-readable kind such as "domain-error"
/// or "parse-error". The CLI prints the kind and maps it to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message);

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] void fail(const std::string& kind, const std::string& message);

inline void require(bool condition, const std::string& message) {
  if (!condition) fail("domain-error", message);
}

}  // namespace kirchhoff
