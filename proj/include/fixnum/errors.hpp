#pragma once

#include <stdexcept>
#include <string>

namespace fixnum {

// Raised when an operation would exceed a configured resource cap (input
// size, group order budget, search node budget).  The CLI maps this to a
// dedicated exit code so callers can distinguish "too big" from "wrong".
class cap_exceeded : public std::runtime_error {
public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fixnum
