#pragma once

#include <stdexcept>
#include <string>

namespace hhw {

/// Raised when a brute-force computation would exceed the configured size cap.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when windowed (truncated) ranks disagree between two window sizes.
class InstabilityError : public std::runtime_error {
public:
  explicit InstabilityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hhw
