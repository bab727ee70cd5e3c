#pragma once

#include <stdexcept>
#include <string>

namespace tamari {

/// Thrown when a request exceeds a configured size bound.  Exceeding a bound
/// is an error, never a silent truncation.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tamari
