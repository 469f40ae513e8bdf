#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace syt {

// Domain error with a stable machine-readable kind ("CycleDetected",
// "SizeMismatch", ...) next to the human-readable message.
class error : public std::runtime_error {
 public:
  error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace syt
