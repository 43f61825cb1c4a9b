#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace semilat {

/// Validation / precondition failure carrying a stable machine-readable name
/// (e.g. "CycleDetected", "MeetMissing") next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace semilat
