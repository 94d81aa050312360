#pragma once

#include <stdexcept>
#include <string>

namespace mtmetrics {

// Raised for caller-side problems: bad arguments, malformed or mismatched
// input files, unknown presets. The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mtmetrics
